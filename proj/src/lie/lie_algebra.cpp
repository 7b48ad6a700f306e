#include "atlas/lie/lie_algebra.hpp"

#include <string>

namespace atlas::lie {

LieAlgebraBasis LieAlgebraBasis::from_matrices(const std::vector<RationalMatrix>& generators,
                                               std::stop_token stop)
{
    LieAlgebraBasis l;
    if (generators.empty()) {
        return l;
    }
    const std::size_t n = generators.front().rows();
    l.ambient_dim_ = n;
    std::vector<RationalVector> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n) {
            throw linalg::DimensionError("Lie algebra generators must share one square shape");
        }
        rows.push_back(g.entries());
    }
    const auto reduced = linalg::reduced_row_echelon(std::move(rows), &l.pivots_);
    if (reduced.size() != generators.size()) {
        throw linalg::DimensionError("Lie algebra generators are linearly dependent");
    }
    for (const auto& r : reduced) {
        l.basis_.push_back(RationalMatrix::from_entries(n, n, r));
    }

    const std::size_t d = l.dim();
    l.brackets_.assign(d * d, {});
    for (std::size_t a = 0; a < d; ++a) {
        if (stop.stop_requested()) {
            throw linalg::Cancelled("bracket closure cancelled");
        }
        for (std::size_t b = a + 1; b < d; ++b) {
            const auto c = lie::bracket(l.basis_[a], l.basis_[b]);
            const auto coords = l.try_coordinates(c);
            if (!coords) {
                throw ClosureError("bracket of basis elements " + std::to_string(a) + ", " + std::to_string(b) +
                                   " leaves the span");
            }
            SparseTerms ab, ba;
            for (std::size_t k = 0; k < d; ++k) {
                if (sgn((*coords)[k]) != 0) {
                    ab.emplace_back(static_cast<std::uint32_t>(k), (*coords)[k]);
                    ba.emplace_back(static_cast<std::uint32_t>(k), -(*coords)[k]);
                }
            }
            l.brackets_[a * d + b] = std::move(ab);
            l.brackets_[b * d + a] = std::move(ba);
        }
    }
    return l;
}

Rational LieAlgebraBasis::structure_constant(std::size_t a, std::size_t b, std::size_t c) const
{
    for (const auto& [k, v] : bracket_terms(a, b)) {
        if (k == c) {
            return v;
        }
    }
    return 0;
}

std::optional<RationalVector> LieAlgebraBasis::try_coordinates(const RationalMatrix& x) const
{
    if (x.rows() != ambient_dim_ || x.cols() != ambient_dim_) {
        throw linalg::DimensionError("coordinates: matrix has the wrong ambient size");
    }
    const auto& flat = x.entries();
    RationalVector coords(dim());
    RationalVector residual = flat;
    for (std::size_t a = 0; a < dim(); ++a) {
        coords[a] = flat[pivots_[a]];
        if (sgn(coords[a]) == 0) {
            continue;
        }
        const auto& e = basis_[a].entries();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (sgn(e[k]) != 0) {
                residual[k] -= coords[a] * e[k];
            }
        }
    }
    if (!linalg::is_zero(residual)) {
        return std::nullopt;
    }
    return coords;
}

RationalVector LieAlgebraBasis::coordinates(const RationalMatrix& x) const
{
    auto c = try_coordinates(x);
    if (!c) {
        throw NotInSpan("matrix is not in the span of the Lie algebra basis");
    }
    return std::move(*c);
}

RationalMatrix LieAlgebraBasis::to_matrix(const RationalVector& coords) const
{
    if (coords.size() != dim()) {
        throw linalg::DimensionError("to_matrix: coordinate vector has wrong length");
    }
    RationalMatrix m(ambient_dim_, ambient_dim_);
    for (std::size_t a = 0; a < dim(); ++a) {
        if (sgn(coords[a]) != 0) {
            m += basis_[a] * coords[a];
        }
    }
    return m;
}

RationalVector LieAlgebraBasis::bracket(const RationalVector& x, const RationalVector& y) const
{
    const std::size_t d = dim();
    if (x.size() != d || y.size() != d) {
        throw linalg::DimensionError("bracket: coordinate vector has wrong length");
    }
    RationalVector out(d);
    Rational xy;
    for (std::size_t a = 0; a < d; ++a) {
        if (sgn(x[a]) == 0) {
            continue;
        }
        for (std::size_t b = 0; b < d; ++b) {
            if (a == b || sgn(y[b]) == 0) {
                continue;
            }
            xy = x[a] * y[b];
            for (const auto& [c, f] : bracket_terms(a, b)) {
                out[c] += xy * f;
            }
        }
    }
    return out;
}

RationalMatrix LieAlgebraBasis::ad(const RationalVector& x) const
{
    const std::size_t d = dim();
    if (x.size() != d) {
        throw linalg::DimensionError("ad: coordinate vector has wrong length");
    }
    RationalMatrix m(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        if (sgn(x[a]) == 0) {
            continue;
        }
        for (std::size_t b = 0; b < d; ++b) {
            for (const auto& [c, f] : bracket_terms(a, b)) {
                m(c, b) += x[a] * f;
            }
        }
    }
    return m;
}

RationalMatrix bracket(const RationalMatrix& x, const RationalMatrix& y)
{
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
        throw linalg::DimensionError("bracket: operands must be square of equal size");
    }
    return linalg::commutator(x, y);
}

RationalMatrix jacobiator(const RationalMatrix& x, const RationalMatrix& y, const RationalMatrix& z)
{
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
}

} // namespace atlas::lie
