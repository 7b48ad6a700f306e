#pragma once

// Small independent reference implementations used as test oracles.

#include "atlas/linalg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using atlas::linalg::Rational;
using atlas::linalg::RationalMatrix;
using atlas::linalg::RationalVector;

/// Textbook Gauss-Jordan with first nonzero pivot and exact division.
inline std::size_t naive_rank(const RationalMatrix& m)
{
    std::vector<RationalVector> a;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        a.emplace_back(m.row(i).begin(), m.row(i).end());
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != r && a[i][c] != 0) {
                const Rational f = a[i][c] / a[r][c];
                for (std::size_t k = c; k < m.cols(); ++k) {
                    a[i][k] -= f * a[r][k];
                }
            }
        }
        ++r;
    }
    return r;
}

/// Leibniz expansion; fine up to 6x6.
inline Rational leibniz_det(const RationalMatrix& m)
{
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                if (perm[i] > perm[j]) {
                    sign = -sign;
                }
            }
        }
        Rational term = sign;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            term *= m(i, perm[i]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// rows x cols matrix of rank at most `rank`: a product of random integer factors,
/// with occasional fractional entries.
inline RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank)
{
    std::uniform_int_distribution<int> d(-5, 5);
    RationalMatrix a(rows, rank);
    RationalMatrix b(rank, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < rank; ++k) {
            a(i, k) = Rational(d(rng), 1 + (d(rng) + 5) % 3);
            a(i, k).canonicalize();
        }
    }
    for (std::size_t k = 0; k < rank; ++k) {
        for (std::size_t j = 0; j < cols; ++j) {
            b(k, j) = d(rng);
        }
    }
    return a * b;
}

} // namespace oracle
