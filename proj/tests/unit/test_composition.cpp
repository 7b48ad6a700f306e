#include "atlas/composition/algebra.hpp"

#include <doctest.h>

using namespace atlas::composition;
using atlas::linalg::Rational;
using atlas::linalg::RationalVector;

namespace {

// Recursive Cayley-Dickson product on coordinate vectors, written out
// independently of the structure tables: (p,q)(r,s) = (pr - s*q, sp + qr*).
RationalVector cd_conj(const RationalVector& x)
{
    RationalVector out(x.size());
    out[0] = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        out[i] = -x[i];
    }
    return out;
}

RationalVector cd_mul(const RationalVector& a, const RationalVector& b)
{
    const std::size_t n = a.size();
    if (n == 1) {
        return {a[0] * b[0]};
    }
    const std::size_t h = n / 2;
    const RationalVector p(a.begin(), a.begin() + h), q(a.begin() + h, a.end());
    const RationalVector r(b.begin(), b.begin() + h), s(b.begin() + h, b.end());
    const auto pr = cd_mul(p, r);
    const auto sq = cd_mul(cd_conj(s), q);
    const auto sp = cd_mul(s, p);
    const auto qr = cd_mul(q, cd_conj(r));
    RationalVector out(n);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = pr[i] - sq[i];
        out[h + i] = sp[i] + qr[i];
    }
    return out;
}

AlgebraElement e(const AlgebraPtr& a, std::size_t i)
{
    return AlgebraElement::unit(a, i);
}

} // namespace

TEST_CASE("doubling the reals gives i^2 = -1")
{
    const auto c = complexes();
    CHECK(c->dim() == 2);
    CHECK(e(c, 1) * e(c, 1) == -e(c, 0));
}

TEST_CASE("doubling the complexes gives ij = k")
{
    const auto h = quaternions();
    CHECK(e(h, 1) * e(h, 2) == e(h, 3));
    CHECK(e(h, 2) * e(h, 1) == -e(h, 3));
}

TEST_CASE("doubling the quaternions gives seven imaginary units")
{
    const auto o = octonions();
    CHECK(o->dim() == 8);
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(e(o, i) * e(o, i) == -e(o, 0));
        CHECK(conjugate(e(o, i)) == -e(o, i));
    }
}

TEST_CASE("structure tables match an independent recursive doubling")
{
    for (const auto& a : {complexes(), quaternions(), octonions(), sedenions()}) {
        const std::size_t n = a->dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                RationalVector x(n), y(n);
                x[i] = 1;
                y[j] = 1;
                CHECK((e(a, i) * e(a, j)).coeffs() == cd_mul(x, y));
            }
        }
        CHECK(a->satisfies_unit_axioms());
    }
}

TEST_CASE("the octonion triple (e1, e2, e4) anti-associates")
{
    const auto o = octonions();
    const auto left = (e(o, 1) * e(o, 2)) * e(o, 4);
    const auto right = e(o, 1) * (e(o, 2) * e(o, 4));
    CHECK(left == e(o, 7));
    CHECK(right == -e(o, 7));
    CHECK_FALSE(associator(e(o, 1), e(o, 2), e(o, 4)).is_zero());
}

TEST_CASE("norms and conjugates")
{
    const auto c = complexes();
    CHECK(norm(AlgebraElement(c, {3, 4})) == 25);
    CHECK(conjugate(e(c, 0)) == e(c, 0));
    CHECK(norm(AlgebraElement::scalar(octonions(), Rational(1, 2))) == Rational(1, 4));
}

TEST_CASE("commutators")
{
    const auto c = complexes();
    const auto h = quaternions();
    ElementSampler s(1);
    CHECK(commutator(s.element(c), s.element(c)).is_zero());
    CHECK(commutator(e(h, 1), e(h, 2)) == e(h, 3) * Rational(2));
    const auto x = s.element(octonions());
    CHECK(commutator(x, x).is_zero());
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(cayley_dickson_double(*sedenions()), UnsupportedAlgebra);
    CHECK_THROWS_AS(inverse(e(sedenions(), 1)), UnsupportedAlgebra);
    CHECK_THROWS_AS(inverse(AlgebraElement::zero(octonions())), atlas::linalg::DivisionByZero);
    CHECK_THROWS_AS(e(octonions(), 1) * e(quaternions(), 1), AlgebraMismatch);
    CHECK_THROWS(algebra_by_name("X"));
    CHECK_THROWS(AlgebraElement(quaternions(), {1, 2}));
}

TEST_CASE("property: composition law on 1000 pairs in dims 1, 2, 4, 8")
{
    for (const auto& a : {reals(), complexes(), quaternions(), octonions()}) {
        ElementSampler s(100 + a->dim());
        for (int t = 0; t < 1000; ++t) {
            const auto x = s.element(a);
            const auto y = s.element(a);
            REQUIRE(norm(x * y) == norm(x) * norm(y));
        }
        CHECK_FALSE(find_composition_witness(a, s, 50).has_value());
    }
}

TEST_CASE("sedenions violate the composition law")
{
    const auto [x, y] = sedenion_composition_witness();
    CHECK(norm(x * y) == 377289);
    CHECK(norm(x) * norm(y) == 337913);
    ElementSampler s(1);
    const auto w = find_composition_witness(sedenions(), s, 100);
    REQUIRE(w.has_value());
    CHECK(norm(w->first * w->second) != norm(w->first) * norm(w->second));
}

TEST_CASE("property: alternativity and associator antisymmetry in the octonions")
{
    const auto o = octonions();
    ElementSampler s(21);
    for (int t = 0; t < 300; ++t) {
        const auto x = s.element(o);
        const auto y = s.element(o);
        const auto z = s.element(o);
        REQUIRE(associator(x, x, y).is_zero());
        REQUIRE(associator(y, x, x).is_zero());
        REQUIRE(associator(x, y, z) == -associator(y, x, z));
        REQUIRE(associator(x, y, z) == -associator(x, z, y));
    }
}

TEST_CASE("property: associativity up to dimension 4, but not in dimension 8")
{
    ElementSampler s(22);
    for (const auto& a : {reals(), complexes(), quaternions()}) {
        for (int t = 0; t < 300; ++t) {
            REQUIRE(associator(s.element(a), s.element(a), s.element(a)).is_zero());
        }
    }
    const auto o = octonions();
    int nonzero = 0;
    for (int t = 0; t < 20; ++t) {
        nonzero += !associator(s.element(o), s.element(o), s.element(o)).is_zero();
    }
    CHECK(nonzero > 0);
}

TEST_CASE("property: inverses and scalar conjugate norm")
{
    ElementSampler s(23);
    for (const auto& a : {reals(), complexes(), quaternions(), octonions()}) {
        const auto one = AlgebraElement::unit(a, 0);
        for (int t = 0; t < 200; ++t) {
            const auto x = s.nonzero_element(a);
            REQUIRE(x * inverse(x) == one);
            REQUIRE(inverse(x) * x == one);
            REQUIRE((conjugate(x) * x).is_scalar());
            REQUIRE((conjugate(x) * x).real_part() == norm(x));
            REQUIRE(one * x == x);
            REQUIRE(x * one == x);
        }
    }
    const auto sd = sedenions();
    for (int t = 0; t < 50; ++t) {
        const auto x = s.element(sd);
        REQUIRE((conjugate(x) * x).is_scalar());
    }
}

TEST_CASE("element samples are seeded and bounded")
{
    ElementSampler a(9), b(9);
    for (int t = 0; t < 100; ++t) {
        const auto x = a.coefficient();
        CHECK(x == b.coefficient());
        CHECK(x >= -9);
        CHECK(x <= 9);
    }
    CHECK(to_string(e(quaternions(), 3)) == "(0, 0, 0, 1)");
}
