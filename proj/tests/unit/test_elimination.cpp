#include "atlas/jordan/jordan.hpp"
#include "atlas/lie/derivations.hpp"
#include "atlas/linalg/elimination.hpp"
#include "atlas/linalg/modular.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace atlas::linalg;

namespace {

bool in_nullspace(const RationalMatrix& m, const std::vector<RationalVector>& basis)
{
    for (const auto& v : basis) {
        if (!is_zero(m * v)) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("rank examples")
{
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix{{1, 1}, {1, 1}}) == 1);
    CHECK(rank(RationalMatrix(4, 2)) == 0);
    CHECK(rank(RationalMatrix{{Rational(1, 2), Rational(1, 3)}, {3, 2}}) == 1);
}

TEST_CASE("nullspace examples")
{
    CHECK(nullspace_basis(RationalMatrix::identity(3)).empty());
    const auto ns = nullspace_basis(RationalMatrix{{1, -1}});
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == RationalVector{1, 1});
    const auto zero = nullspace_basis(RationalMatrix(2, 3));
    CHECK(zero.size() == 3);
}

TEST_CASE("quaternion derivation constraints have a 3-dimensional nullspace")
{
    const auto c = atlas::lie::derivation_constraints(atlas::composition::quaternions()->table());
    const auto ns = nullspace_basis(c);
    CHECK(ns.size() == 3);
    CHECK(in_nullspace(c, ns));
}

TEST_CASE("modular probe examples")
{
    std::mt19937_64 rng(3);
    const auto p = random_probe_prime(rng);
    CHECK(rank_modular_probe(RationalMatrix::identity(3), p) == 3);
    CHECK(rank_modular_probe(RationalMatrix{{1, -1}}, p) == 1);
    CHECK_THROWS_AS(rank_modular_probe(RationalMatrix::identity(2), 101), std::invalid_argument);
}

TEST_CASE("property: rank matches a Gauss-Jordan oracle and is invariant under row operations")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 1 + rng() % 8;
        const std::size_t r = rng() % (std::min(rows, cols) + 1);
        auto m = oracle::random_low_rank(rng, rows, cols, r);
        const auto expected = oracle::naive_rank(m);
        CHECK(expected <= r);
        CHECK(rank(m) == expected);

        std::vector<RationalVector> permuted;
        for (std::size_t i = 0; i < rows; ++i) {
            RationalVector row(m.row(i).begin(), m.row(i).end());
            const Rational scale(static_cast<long>(rng() % 7) + 1, 3);
            for (auto& x : row) {
                x *= scale;
            }
            permuted.push_back(std::move(row));
        }
        std::shuffle(permuted.begin(), permuted.end(), rng);
        CHECK(rank(RationalMatrix::from_rows(permuted)) == expected);

        const auto ns = nullspace_basis(m);
        CHECK(ns.size() + expected == cols);
        CHECK(in_nullspace(m, ns));
        if (!ns.empty()) {
            CHECK(oracle::naive_rank(RationalMatrix::from_rows(ns)) == ns.size());
        }
        const auto p = random_probe_prime(rng);
        CHECK(rank_modular_probe(m, p) <= expected);
    }
}

TEST_CASE("property: exact and modular nullspace routes agree")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 2 + rng() % 10;
        const std::size_t cols = 2 + rng() % 10;
        const auto m = oracle::random_low_rank(rng, rows, cols, rng() % std::min(rows, cols));
        CHECK(nullspace_basis_exact(m) == nullspace_basis_modular(m, rng()));
    }
}

TEST_CASE("tall matrices take the modular route and agree with exact elimination")
{
    std::mt19937_64 rng(13);
    const auto m = oracle::random_low_rank(rng, kModularRowThreshold + 100, 12, 7);
    const auto ns = nullspace_basis(m);
    CHECK(ns.size() == 5);
    CHECK(ns == nullspace_basis_exact(m));
    CHECK(rank(m) == 7);
}

TEST_CASE("J3(O) derivation constraints: 10206 x 729, rank 677")
{
    const auto c = atlas::lie::derivation_constraints(atlas::jordan::j3("O")->table());
    CHECK(c.rows() == 10206);
    CHECK(c.cols() == 729);
    std::mt19937_64 rng(5);
    CHECK(rank_modular_probe(c, random_probe_prime(rng)) == 677);
    const auto ns = nullspace_basis(c);
    CHECK(ns.size() == 52);
    CHECK(in_nullspace(c, ns));
}

TEST_CASE("reduced row echelon form")
{
    std::vector<std::size_t> pivots;
    const auto r = reduced_row_echelon({{2, 4, 2}, {1, 2, 1}, {0, 0, 3}}, &pivots);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == RationalVector{1, 2, 0});
    CHECK(r[1] == RationalVector{0, 0, 1});
    CHECK(pivots == std::vector<std::size_t>{0, 2});
}

TEST_CASE("determinant and principal minors against Leibniz expansion")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto m = oracle::random_low_rank(rng, n, n, n - (rng() % 4 == 0 ? 1 : 0));
        CHECK(determinant(m) == oracle::leibniz_det(m));
        const auto minors = leading_principal_minors(m);
        REQUIRE(minors.size() == n);
        for (std::size_t k = 1; k <= n; ++k) {
            RationalMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    sub(i, j) = m(i, j);
                }
            }
            CHECK(minors[k - 1] == oracle::leibniz_det(sub));
        }
    }
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("definiteness by Sylvester's criterion")
{
    CHECK(definiteness(RationalMatrix{{2, 1}, {1, 2}}) == Definiteness::positive);
    CHECK(definiteness(RationalMatrix{{-2, 1}, {1, -2}}) == Definiteness::negative);
    CHECK(definiteness(RationalMatrix{{1, 0}, {0, -1}}) == Definiteness::neither);
    CHECK(definiteness(RationalMatrix{{0, 0}, {0, 1}}) == Definiteness::neither);
    CHECK_THROWS(definiteness(RationalMatrix{{1, 2}, {0, 1}}));
}

TEST_CASE("a requested stop cancels elimination")
{
    std::stop_source source;
    source.request_stop();
    std::mt19937_64 rng(19);
    const auto m = oracle::random_low_rank(rng, 30, 30, 20);
    CHECK_THROWS_AS(nullspace_basis(m, source.get_token()), Cancelled);
    CHECK_THROWS_AS(rank(m, source.get_token()), Cancelled);
}
