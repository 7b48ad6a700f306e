#pragma once

#include "atlas/linalg/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace atlas::composition {

using linalg::Rational;
using linalg::RationalVector;

/// Nonzero coordinates of a basis product e_i e_j.
using SparseTerms = std::vector<std::pair<std::uint32_t, Rational>>;

/// Multiplication table of a finite-dimensional algebra:
/// e_i e_j = sum_k c[i][j][k] e_k, stored sparsely per (i, j).
class StructureTable {
public:
    StructureTable() = default;
    explicit StructureTable(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }

    const SparseTerms& product(std::size_t i, std::size_t j) const { return terms_[i * dim_ + j]; }
    void set_product(std::size_t i, std::size_t j, const RationalVector& coords);

    Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;

    /// Bilinear extension of the table.
    RationalVector multiply(const RationalVector& x, const RationalVector& y) const;

    bool is_commutative() const;

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<SparseTerms> terms_;
};

} // namespace atlas::composition
