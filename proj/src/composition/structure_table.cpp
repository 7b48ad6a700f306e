#include "atlas/composition/structure_table.hpp"

#include "atlas/linalg/matrix.hpp"

namespace atlas::composition {

StructureTable::StructureTable(std::size_t dim) : dim_(dim), terms_(dim * dim)
{
}

void StructureTable::set_product(std::size_t i, std::size_t j, const RationalVector& coords)
{
    if (coords.size() != dim_) {
        throw linalg::DimensionError("set_product: coordinate vector has wrong length");
    }
    SparseTerms terms;
    for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(coords[k]) != 0) {
            terms.emplace_back(static_cast<std::uint32_t>(k), coords[k]);
        }
    }
    terms_[i * dim_ + j] = std::move(terms);
}

Rational StructureTable::coefficient(std::size_t i, std::size_t j, std::size_t k) const
{
    for (const auto& [idx, c] : product(i, j)) {
        if (idx == k) {
            return c;
        }
    }
    return 0;
}

RationalVector StructureTable::multiply(const RationalVector& x, const RationalVector& y) const
{
    if (x.size() != dim_ || y.size() != dim_) {
        throw linalg::DimensionError("multiply: operand length does not match algebra dimension");
    }
    RationalVector out(dim_);
    Rational xy;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) {
                continue;
            }
            xy = x[i] * y[j];
            for (const auto& [k, c] : product(i, j)) {
                out[k] += xy * c;
            }
        }
    }
    return out;
}

bool StructureTable::is_commutative() const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if (product(i, j) != product(j, i)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace atlas::composition
