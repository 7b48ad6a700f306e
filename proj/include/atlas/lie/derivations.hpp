#pragma once

#include "atlas/composition/algebra.hpp"
#include "atlas/jordan/jordan.hpp"
#include "atlas/lie/lie_algebra.hpp"

#include <stop_token>

namespace atlas::lie {

class DerivationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr std::size_t kMaxDerivationAmbientDim = 32;

/// Linear system for the n^2 entries of D (unknown a*n + b is D(a, b)) that
/// encodes D(e_i e_j) = D(e_i) e_j + e_i D(e_j). One block of n rows per basis
/// pair: unordered pairs i <= j for a commutative table, ordered pairs
/// otherwise.
RationalMatrix derivation_constraints(const composition::StructureTable& table);

/// Leibniz rule on every ordered pair of basis elements.
bool is_derivation(const composition::StructureTable& table, const RationalMatrix& d);

/// All derivations, as a certified Lie algebra in canonical echelon form.
LieAlgebraBasis derivation_algebra(const composition::StructureTable& table, std::stop_token stop = {});
LieAlgebraBasis derivation_algebra(const composition::FiniteAlgebra& algebra, std::stop_token stop = {});
LieAlgebraBasis derivation_algebra(const jordan::JordanAlgebra& algebra, std::stop_token stop = {});

} // namespace atlas::lie
