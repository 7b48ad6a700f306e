#include "atlas/linalg/matrix.hpp"

#include <doctest.h>

using namespace atlas::linalg;

TEST_CASE("matrix arithmetic")
{
    const RationalMatrix a{{1, 2}, {3, 4}};
    const RationalMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == RationalMatrix{{2, 1}, {4, 3}});
    CHECK(a + b == RationalMatrix{{1, 3}, {4, 4}});
    CHECK(a - a == RationalMatrix(2, 2));
    CHECK(a * Rational(1, 2) == RationalMatrix{{Rational(1, 2), 1}, {Rational(3, 2), 2}});
    CHECK(a.transpose() == RationalMatrix{{1, 3}, {2, 4}});
    CHECK(a.trace() == 5);
    CHECK(a * RationalVector{1, 1} == RationalVector{3, 7});
    CHECK(RationalMatrix::identity(2) * a == a);
}

TEST_CASE("matrix shape errors")
{
    const RationalMatrix a{{1, 2, 3}};
    CHECK_THROWS_AS(a * a, DimensionError);
    CHECK_THROWS_AS(a + RationalMatrix(2, 2), DimensionError);
    CHECK_THROWS_AS(a * RationalVector{1}, DimensionError);
    CHECK_THROWS_AS(RationalMatrix::from_rows({{1, 2}, {1}}), DimensionError);
}

TEST_CASE("rows, columns, symmetry")
{
    const auto m = RationalMatrix::from_columns({{1, 2}, {3, 4}});
    CHECK(m == RationalMatrix{{1, 3}, {2, 4}});
    CHECK(m.column(1) == RationalVector{3, 4});
    CHECK_FALSE(m.is_symmetric());
    CHECK((m + m.transpose()).is_symmetric());
    CHECK(RationalMatrix(3, 3).is_zero());
}

TEST_CASE("commutator of matrices")
{
    const RationalMatrix e{{0, 1}, {0, 0}};
    const RationalMatrix f{{0, 0}, {1, 0}};
    CHECK(commutator(e, f) == RationalMatrix{{1, 0}, {0, -1}});
    CHECK(commutator(e, e).is_zero());
}
