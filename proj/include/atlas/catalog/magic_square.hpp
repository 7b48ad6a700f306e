#pragma once

#include <array>
#include <cstddef>
#include <stop_token>
#include <string>

namespace atlas::catalog {

/// Division algebras indexing the rows and columns, in order R, C, H, O.
inline constexpr std::array<const char*, 4> kDivisionAlgebras{"R", "C", "H", "O"};
inline constexpr std::array<std::size_t, 4> kDivisionAlgebraDims{1, 2, 4, 8};

struct MagicSquareCell {
    std::string row_algebra;
    std::string col_algebra;
    std::size_t lie_dim = 0;
    std::string group_label; // compact group with this Lie algebra, resolvable by group_dim
    std::string lie_label;
    std::string note;
    friend bool operator==(const MagicSquareCell&, const MagicSquareCell&) = default;
};

using MagicSquare = std::array<std::array<MagicSquareCell, 4>, 4>;

/// dim Der(A) and dim Der(J3(A)) for A = R, C, H, O.
struct DerivationDims {
    std::array<std::size_t, 4> algebra{};
    std::array<std::size_t, 4> jordan{};
    friend bool operator==(const DerivationDims&, const DerivationDims&) = default;
};

/// Runs the derivation solver on all eight algebras.
DerivationDims compute_derivation_dims(std::stop_token stop = {});

/// dim Der(A) + dim Der(J3(B)) + (dim A - 1)(dim J3(B) - 1)
std::size_t tits_dim(std::size_t der_a, std::size_t dim_a, std::size_t der_j3b, std::size_t dim_j3b);

/// Cell (A, B) from the Tits formula: A indexes rows, B columns.
MagicSquare magic_square_level3(const DerivationDims& dims);

/// The Spin/unitary square, recorded data.
MagicSquare magic_square_level2();

bool is_symmetric(const MagicSquare& square);

std::array<std::array<std::size_t, 4>, 4> dimension_matrix(const MagicSquare& square);

} // namespace atlas::catalog
