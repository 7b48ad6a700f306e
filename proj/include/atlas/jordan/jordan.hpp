#pragma once

#include "atlas/composition/algebra.hpp"
#include "atlas/linalg/matrix.hpp"

#include <array>
#include <memory>
#include <optional>
#include <utility>

namespace atlas::jordan {

using composition::AlgebraElement;
using composition::AlgebraPtr;
using linalg::Rational;
using linalg::RationalMatrix;
using linalg::RationalVector;

/// Off-diagonal slots of a hermitian 3x3 matrix, in basis order.
enum class OffDiagonal : std::size_t { e12 = 0, e13 = 1, e23 = 2 };

/// 3x3 hermitian matrix over a composition algebra K:
///
///     [ d0      a      b  ]
///     [ conj(a) d1     c  ]      a = (1,2), b = (1,3), c = (2,3)
///     [ conj(b) conj(c) d2 ]
///
/// Only the 3 + 3 dim K free coordinates are stored.
class HermitianMatrix3 {
public:
    explicit HermitianMatrix3(AlgebraPtr k);
    HermitianMatrix3(std::array<Rational, 3> diag, std::array<AlgebraElement, 3> off);

    static HermitianMatrix3 identity(AlgebraPtr k);
    static HermitianMatrix3 diagonal(AlgebraPtr k, const Rational& d0, const Rational& d1, const Rational& d2);
    /// Coordinates in the canonical basis: 3 diagonal units, then the (1,2),
    /// (1,3), (2,3) blocks, each expanded over the basis of K.
    static HermitianMatrix3 from_coordinates(AlgebraPtr k, const RationalVector& coords);

    const AlgebraPtr& coefficient_algebra() const noexcept { return k_; }
    const Rational& diag(std::size_t i) const { return diag_.at(i); }
    const AlgebraElement& off(OffDiagonal pos) const { return off_[static_cast<std::size_t>(pos)]; }

    /// Entry (row, col), 0-based; diagonal entries come back as scalars in K.
    AlgebraElement entry(std::size_t row, std::size_t col) const;

    RationalVector coordinates() const;

    HermitianMatrix3& operator+=(const HermitianMatrix3& other);
    HermitianMatrix3& operator-=(const HermitianMatrix3& other);
    HermitianMatrix3& operator*=(const Rational& s);
    friend HermitianMatrix3 operator+(HermitianMatrix3 a, const HermitianMatrix3& b) { return a += b; }
    friend HermitianMatrix3 operator-(HermitianMatrix3 a, const HermitianMatrix3& b) { return a -= b; }
    friend HermitianMatrix3 operator*(HermitianMatrix3 a, const Rational& s) { return a *= s; }
    friend HermitianMatrix3 operator*(const Rational& s, HermitianMatrix3 a) { return a *= s; }

    bool is_zero() const;
    friend bool operator==(const HermitianMatrix3& a, const HermitianMatrix3& b);

private:
    AlgebraPtr k_;
    std::array<Rational, 3> diag_;
    std::array<AlgebraElement, 3> off_;
};

/// (xy + yx)/2 with the K product inside the matrix entries.
HermitianMatrix3 jordan_product(const HermitianMatrix3& x, const HermitianMatrix3& y);

/// 3 + 3 dim K. Defined for K in the division-algebra part of the tower.
std::size_t jordan_dim(const composition::FiniteAlgebra& k);

Rational trace(const HermitianMatrix3& x);
/// x - (tr x / 3) 1
HermitianMatrix3 traceless_projection(const HermitianMatrix3& x);

/// (x^2 ∘ (x ∘ y)) == (x ∘ (x^2 ∘ y))
bool jordan_identity_holds(const HermitianMatrix3& x, const HermitianMatrix3& y);

/// J3(K) with its structure constants in the canonical basis.
class JordanAlgebra {
public:
    explicit JordanAlgebra(AlgebraPtr k);

    const AlgebraPtr& coefficient_algebra() const noexcept { return k_; }
    std::size_t dim() const noexcept { return table_.dim(); }
    const composition::StructureTable& table() const noexcept { return table_; }
    std::string name() const { return "J3(" + k_->name() + ")"; }

    HermitianMatrix3 basis_element(std::size_t i) const;

private:
    AlgebraPtr k_;
    composition::StructureTable table_;
};

using JordanPtr = std::shared_ptr<const JordanAlgebra>;

/// Shared instance of J3(K) for K named "R", "C", "H", "O" or "S".
JordanPtr j3(const std::string& k);

/// Gram matrix of (x, y) -> tr(x ∘ y) on the canonical basis.
RationalMatrix trace_form_gram(const JordanAlgebra& j);

std::optional<std::pair<HermitianMatrix3, HermitianMatrix3>>
find_jordan_identity_witness(const AlgebraPtr& k, composition::ElementSampler& sampler, std::size_t tries);

HermitianMatrix3 random_hermitian(const AlgebraPtr& k, composition::ElementSampler& sampler);

} // namespace atlas::jordan
