#pragma once

#include "atlas/composition/structure_table.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atlas::composition {

class AlgebraMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedAlgebra : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A member of the Cayley-Dickson tower R, C, H, O, S (sedenions).
///
/// Basis e_0 .. e_{dim-1}; e_0 is the unit and conjugation negates every
/// imaginary unit. Doubling places the new units at e_{k+dim} = (0, e_k).
class FiniteAlgebra {
public:
    FiniteAlgebra(std::string name, StructureTable table, std::vector<int> conjugation_signs);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return table_.dim(); }
    const StructureTable& table() const noexcept { return table_; }
    int conjugation_sign(std::size_t i) const { return conjugation_signs_.at(i); }

    /// e_0 two-sided unit, e_i^2 = -e_0 and e_i e_j = -e_j e_i for distinct i, j >= 1.
    bool satisfies_unit_axioms() const;

    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b)
    {
        return a.name_ == b.name_ && a.table_ == b.table_;
    }

private:
    std::string name_;
    StructureTable table_;
    std::vector<int> conjugation_signs_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// (p, q)(r, s) = (pr - s̄q, sp + qr̄), (p, q)‾ = (p̄, -q).
AlgebraPtr cayley_dickson_double(const FiniteAlgebra& a);

AlgebraPtr reals();
AlgebraPtr complexes();
AlgebraPtr quaternions();
AlgebraPtr octonions();
AlgebraPtr sedenions();

/// "R", "C", "H", "O" or "S".
AlgebraPtr algebra_by_name(const std::string& name);

class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr algebra, RationalVector coeffs);

    static AlgebraElement zero(AlgebraPtr algebra);
    static AlgebraElement unit(AlgebraPtr algebra, std::size_t index);
    static AlgebraElement scalar(AlgebraPtr algebra, const Rational& value);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const RationalVector& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t dim() const noexcept { return coeffs_.size(); }

    const Rational& real_part() const { return coeffs_[0]; }
    bool is_zero() const;
    bool is_scalar() const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& s);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    AlgebraPtr algebra_;
    RationalVector coeffs_;
};

/// Throws AlgebraMismatch unless both operands live in the same algebra.
void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement conjugate(const AlgebraElement& x);
/// Scalar part of x̄x.
Rational norm(const AlgebraElement& x);
/// x̄ / N(x). Not offered on the sedenions, which have zero divisors.
AlgebraElement inverse(const AlgebraElement& x);
/// (xy)z - x(yz)
AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);
/// xy - yx
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

std::string to_string(const AlgebraElement& x);

/// Seeded source of test elements: integer coefficients uniform in [-9, 9].
class ElementSampler {
public:
    explicit ElementSampler(std::uint64_t seed) : engine_(seed) {}

    Rational coefficient();
    RationalVector vector(std::size_t n);
    AlgebraElement element(const AlgebraPtr& algebra);
    AlgebraElement nonzero_element(const AlgebraPtr& algebra);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// First sampled pair with N(xy) != N(x)N(y), if any within `tries`.
std::optional<std::pair<AlgebraElement, AlgebraElement>>
find_composition_witness(const AlgebraPtr& algebra, ElementSampler& sampler, std::size_t tries);

/// Stored sedenion pair violating the composition law (regression fixture).
std::pair<AlgebraElement, AlgebraElement> sedenion_composition_witness();

} // namespace atlas::composition
