#include "atlas/lie/derivations.hpp"

#include <string>

namespace atlas::lie {

namespace {

void check_stop(const std::stop_token& stop)
{
    if (stop.stop_requested()) {
        throw linalg::Cancelled("derivation computation cancelled");
    }
}

// Coordinates of D(e_i): column i of D.
RationalVector column(const RationalMatrix& d, std::size_t i)
{
    return d.column(i);
}

} // namespace

RationalMatrix derivation_constraints(const composition::StructureTable& table)
{
    const std::size_t n = table.dim();
    if (n == 0 || n > kMaxDerivationAmbientDim) {
        throw DerivationError("derivation constraints: algebra dimension " + std::to_string(n) +
                          " outside 1.." + std::to_string(kMaxDerivationAmbientDim));
    }
    const bool commutative = table.is_commutative();
    const std::size_t pairs = commutative ? n * (n + 1) / 2 : n * n;
    RationalMatrix m(pairs * n, n * n);

    std::size_t block = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = commutative ? i : 0; j < n; ++j, ++block) {
            const std::size_t row0 = block * n;
            // D(e_i e_j)_k = sum_m c_ijm D(k, m)
            for (const auto& [mm, c] : table.product(i, j)) {
                for (std::size_t k = 0; k < n; ++k) {
                    m(row0 + k, k * n + mm) += c;
                }
            }
            // (D(e_i) e_j)_k = sum_a D(a, i) c_ajk
            for (std::size_t a = 0; a < n; ++a) {
                for (const auto& [k, c] : table.product(a, j)) {
                    m(row0 + k, a * n + i) -= c;
                }
            }
            // (e_i D(e_j))_k = sum_b D(b, j) c_ibk
            for (std::size_t b = 0; b < n; ++b) {
                for (const auto& [k, c] : table.product(i, b)) {
                    m(row0 + k, b * n + j) -= c;
                }
            }
        }
    }
    return m;
}

bool is_derivation(const composition::StructureTable& table, const RationalMatrix& d)
{
    const std::size_t n = table.dim();
    if (d.rows() != n || d.cols() != n) {
        return false;
    }
    std::vector<RationalVector> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        images[i] = column(d, i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector ei(n);
        ei[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            RationalVector ej(n);
            ej[j] = 1;
            RationalVector prod(n);
            for (const auto& [k, c] : table.product(i, j)) {
                prod[k] = c;
            }
            auto lhs = d * prod;
            const auto r1 = table.multiply(images[i], ej);
            const auto r2 = table.multiply(ei, images[j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (lhs[k] != r1[k] + r2[k]) {
                    return false;
                }
            }
        }
    }
    return true;
}

LieAlgebraBasis derivation_algebra(const composition::StructureTable& table, std::stop_token stop)
{
    const std::size_t n = table.dim();
    const auto constraints = derivation_constraints(table);
    check_stop(stop);
    const auto kernel = linalg::nullspace_basis(constraints, stop);
    check_stop(stop);

    std::vector<RationalMatrix> derivations;
    derivations.reserve(kernel.size());
    for (const auto& v : kernel) {
        derivations.push_back(RationalMatrix::from_entries(n, n, v));
    }
    auto l = LieAlgebraBasis::from_matrices(derivations, stop);
    for (const auto& d : l.basis()) {
        check_stop(stop);
        if (!is_derivation(table, d)) {
            throw DerivationError("computed basis element violates the Leibniz rule");
        }
    }
    return l;
}

LieAlgebraBasis derivation_algebra(const composition::FiniteAlgebra& algebra, std::stop_token stop)
{
    return derivation_algebra(algebra.table(), stop);
}

LieAlgebraBasis derivation_algebra(const jordan::JordanAlgebra& algebra, std::stop_token stop)
{
    return derivation_algebra(algebra.table(), stop);
}

} // namespace atlas::lie
