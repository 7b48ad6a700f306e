#include "atlas/composition/algebra.hpp"

#include "atlas/linalg/matrix.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace atlas::composition {

namespace {

std::string tower_name(std::size_t dim)
{
    switch (dim) {
    case 1: return "R";
    case 2: return "C";
    case 4: return "H";
    case 8: return "O";
    case 16: return "S";
    default: return "CD" + std::to_string(dim);
    }
}

RationalVector conj_vec(const FiniteAlgebra& a, const RationalVector& v)
{
    RationalVector out(v);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (a.conjugation_sign(i) < 0 && sgn(out[i]) != 0) {
            out[i] = -out[i];
        }
    }
    return out;
}

RationalVector sub(RationalVector a, const RationalVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
    }
    return a;
}

RationalVector add(RationalVector a, const RationalVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

RationalVector unit_vec(std::size_t n, std::size_t i)
{
    RationalVector v(n);
    v[i] = 1;
    return v;
}

} // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, StructureTable table, std::vector<int> conjugation_signs)
    : name_(std::move(name)), table_(std::move(table)), conjugation_signs_(std::move(conjugation_signs))
{
    if (conjugation_signs_.size() != table_.dim()) {
        throw linalg::DimensionError("conjugation signs do not match algebra dimension");
    }
}

bool FiniteAlgebra::satisfies_unit_axioms() const
{
    const std::size_t n = dim();
    for (std::size_t j = 0; j < n; ++j) {
        const SparseTerms unit{{static_cast<std::uint32_t>(j), Rational(1)}};
        if (table_.product(0, j) != unit || table_.product(j, 0) != unit) {
            return false;
        }
    }
    const SparseTerms minus_one{{0u, Rational(-1)}};
    for (std::size_t i = 1; i < n; ++i) {
        if (table_.product(i, i) != minus_one) {
            return false;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            auto neg = table_.product(j, i);
            for (auto& t : neg) {
                t.second = -t.second;
            }
            if (table_.product(i, j) != neg) {
                return false;
            }
        }
    }
    return true;
}

AlgebraPtr cayley_dickson_double(const FiniteAlgebra& a)
{
    const std::size_t n = a.dim();
    if (n != 1 && n != 2 && n != 4 && n != 8) {
        throw UnsupportedAlgebra("Cayley-Dickson tower is capped at the sedenions (input dim " +
                                 std::to_string(n) + ")");
    }
    const std::size_t m = 2 * n;
    const auto& t = a.table();
    StructureTable table(m);
    // Basis e_a = (e_a, 0) for a < n and e_{a} = (0, e_{a-n}) otherwise.
    auto halves = [n](std::size_t idx) {
        RationalVector p(n), q(n);
        (idx < n ? p : q)[idx % n] = 1;
        return std::pair{p, q};
    };
    for (std::size_t x = 0; x < m; ++x) {
        const auto [p, q] = halves(x);
        for (std::size_t y = 0; y < m; ++y) {
            const auto [r, s] = halves(y);
            const auto first = sub(t.multiply(p, r), t.multiply(conj_vec(a, s), q));
            const auto second = add(t.multiply(s, p), t.multiply(q, conj_vec(a, r)));
            RationalVector coords(m);
            std::copy(first.begin(), first.end(), coords.begin());
            std::copy(second.begin(), second.end(), coords.begin() + static_cast<std::ptrdiff_t>(n));
            table.set_product(x, y, coords);
        }
    }
    std::vector<int> signs(m, -1);
    signs[0] = 1;
    return std::make_shared<const FiniteAlgebra>(tower_name(m), std::move(table), std::move(signs));
}

AlgebraPtr reals()
{
    static const AlgebraPtr r = [] {
        StructureTable table(1);
        table.set_product(0, 0, RationalVector{Rational(1)});
        return std::make_shared<const FiniteAlgebra>("R", std::move(table), std::vector<int>{1});
    }();
    return r;
}

AlgebraPtr complexes()
{
    static const AlgebraPtr c = cayley_dickson_double(*reals());
    return c;
}

AlgebraPtr quaternions()
{
    static const AlgebraPtr h = cayley_dickson_double(*complexes());
    return h;
}

AlgebraPtr octonions()
{
    static const AlgebraPtr o = cayley_dickson_double(*quaternions());
    return o;
}

AlgebraPtr sedenions()
{
    static const AlgebraPtr s = cayley_dickson_double(*octonions());
    return s;
}

AlgebraPtr algebra_by_name(const std::string& name)
{
    if (name == "R") return reals();
    if (name == "C") return complexes();
    if (name == "H") return quaternions();
    if (name == "O") return octonions();
    if (name == "S") return sedenions();
    throw UnsupportedAlgebra("unknown algebra '" + name + "'");
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, RationalVector coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs))
{
    if (!algebra_) {
        throw std::invalid_argument("AlgebraElement needs an algebra");
    }
    if (coeffs_.size() != algebra_->dim()) {
        throw linalg::DimensionError("coefficient count " + std::to_string(coeffs_.size()) +
                                     " does not match dim " + std::to_string(algebra_->dim()) + " of " +
                                     algebra_->name());
    }
}

AlgebraElement AlgebraElement::zero(AlgebraPtr algebra)
{
    const auto n = algebra->dim();
    return {std::move(algebra), RationalVector(n)};
}

AlgebraElement AlgebraElement::unit(AlgebraPtr algebra, std::size_t index)
{
    const auto n = algebra->dim();
    if (index >= n) {
        throw std::out_of_range("basis unit index out of range");
    }
    return {std::move(algebra), unit_vec(n, index)};
}

AlgebraElement AlgebraElement::scalar(AlgebraPtr algebra, const Rational& value)
{
    const auto n = algebra->dim();
    RationalVector v(n);
    v[0] = value;
    return {std::move(algebra), std::move(v)};
}

bool AlgebraElement::is_zero() const
{
    return linalg::is_zero(coeffs_);
}

bool AlgebraElement::is_scalar() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.algebra() == y.algebra()) {
        return;
    }
    if (x.dim() != y.dim() || !(*x.algebra() == *y.algebra())) {
        throw AlgebraMismatch("operands belong to different algebras (" + x.algebra()->name() + ", " +
                              y.algebra()->name() + ")");
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    require_same_algebra(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    require_same_algebra(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y)
{
    return multiply(x, y);
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    return a.dim() == b.dim() && *a.algebra() == *b.algebra() && a.coeffs_ == b.coeffs_;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y)
{
    require_same_algebra(x, y);
    return {x.algebra(), x.algebra()->table().multiply(x.coeffs(), y.coeffs())};
}

AlgebraElement conjugate(const AlgebraElement& x)
{
    return {x.algebra(), conj_vec(*x.algebra(), x.coeffs())};
}

Rational norm(const AlgebraElement& x)
{
    return multiply(conjugate(x), x).real_part();
}

AlgebraElement inverse(const AlgebraElement& x)
{
    if (x.dim() > 8) {
        throw UnsupportedAlgebra("inverse is not offered on " + x.algebra()->name());
    }
    const Rational n = norm(x);
    if (sgn(n) == 0) {
        throw linalg::DivisionByZero("inverse of zero");
    }
    return conjugate(x) * Rational(1 / n);
}

AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z)
{
    require_same_algebra(x, y);
    require_same_algebra(y, z);
    return (x * y) * z - x * (y * z);
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y)
{
    return x * y - y * x;
}

std::string to_string(const AlgebraElement& x)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.dim(); ++i) {
        os << (i ? ", " : "") << x[i].get_str();
    }
    os << ')';
    return os.str();
}

Rational ElementSampler::coefficient()
{
    return Rational(static_cast<long>(engine_() % 19) - 9);
}

RationalVector ElementSampler::vector(std::size_t n)
{
    RationalVector v(n);
    for (auto& c : v) {
        c = coefficient();
    }
    return v;
}

AlgebraElement ElementSampler::element(const AlgebraPtr& algebra)
{
    return {algebra, vector(algebra->dim())};
}

AlgebraElement ElementSampler::nonzero_element(const AlgebraPtr& algebra)
{
    for (;;) {
        auto x = element(algebra);
        if (!x.is_zero()) {
            return x;
        }
    }
}

std::optional<std::pair<AlgebraElement, AlgebraElement>>
find_composition_witness(const AlgebraPtr& algebra, ElementSampler& sampler, std::size_t tries)
{
    for (std::size_t t = 0; t < tries; ++t) {
        auto x = sampler.element(algebra);
        auto y = sampler.element(algebra);
        if (norm(x * y) != norm(x) * norm(y)) {
            return std::pair{std::move(x), std::move(y)};
        }
    }
    return std::nullopt;
}

std::pair<AlgebraElement, AlgebraElement> sedenion_composition_witness()
{
    // First hit of find_composition_witness on the sedenions with seed 1:
    // N(xy) = 377289, N(x)N(y) = 337913.
    constexpr std::array<int, 16> x{2, -6, 4, 3, -9, 7, -6, 4, -7, 0, -7, 5, 1, -5, 7, 4};
    constexpr std::array<int, 16> y{-8, 9, -3, -8, -8, 7, -8, 0, 2, 6, 8, 0, -8, -8, 5, -9};
    RationalVector xv(16), yv(16);
    for (std::size_t i = 0; i < 16; ++i) {
        xv[i] = x[i];
        yv[i] = y[i];
    }
    return {AlgebraElement(sedenions(), std::move(xv)), AlgebraElement(sedenions(), std::move(yv))};
}

} // namespace atlas::composition
