#pragma once

#include "atlas/composition/structure_table.hpp"
#include "atlas/linalg/elimination.hpp"
#include "atlas/linalg/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <stop_token>
#include <vector>

namespace atlas::lie {

using composition::SparseTerms;
using linalg::Rational;
using linalg::RationalMatrix;
using linalg::RationalVector;

class ClosureError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotInSpan : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Lie algebra of square matrices, kept in canonical form: the basis is the
/// reduced row echelon form of the span (matrices flattened row-major), and
/// the structure constants [D_a, D_b] = sum_c f[a][b][c] D_c are certified
/// exactly when the basis is built.
class LieAlgebraBasis {
public:
    /// Throws ClosureError if the span is not closed under the commutator.
    static LieAlgebraBasis from_matrices(const std::vector<RationalMatrix>& generators,
                                         std::stop_token stop = {});

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<RationalMatrix>& basis() const noexcept { return basis_; }
    const RationalMatrix& element(std::size_t a) const { return basis_.at(a); }

    /// f[a][b][·], sparse.
    const SparseTerms& bracket_terms(std::size_t a, std::size_t b) const { return brackets_[a * dim() + b]; }
    Rational structure_constant(std::size_t a, std::size_t b, std::size_t c) const;

    /// Exact coordinates of x in the basis, or nullopt if x is not in the span.
    std::optional<RationalVector> try_coordinates(const RationalMatrix& x) const;
    /// As try_coordinates, throwing NotInSpan.
    RationalVector coordinates(const RationalMatrix& x) const;

    RationalMatrix to_matrix(const RationalVector& coords) const;

    /// Bracket in coordinates, from the structure constants.
    RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

    /// Matrix of ad_x in the basis: column b holds [x, D_b].
    RationalMatrix ad(const RationalVector& x) const;

private:
    LieAlgebraBasis() = default;

    std::size_t ambient_dim_ = 0;
    std::vector<RationalMatrix> basis_;
    std::vector<std::size_t> pivots_; // flattened position read to get each coordinate
    std::vector<SparseTerms> brackets_;
};

/// Matrix commutator xy - yx of two square matrices of equal size.
RationalMatrix bracket(const RationalMatrix& x, const RationalMatrix& y);

/// Sum over Jacobi cyclic terms; zero for any three matrices.
RationalMatrix jacobiator(const RationalMatrix& x, const RationalMatrix& y, const RationalMatrix& z);

} // namespace atlas::lie
