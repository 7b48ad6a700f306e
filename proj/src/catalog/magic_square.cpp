#include "atlas/catalog/magic_square.hpp"

#include "atlas/lie/derivations.hpp"

namespace atlas::catalog {

namespace {

struct Label {
    const char* group;
    const char* lie;
    const char* note;
};

// clang-format off
constexpr std::array<std::array<Label, 4>, 4> kLevel3Labels{{
    {{{"SO(3)", "so(3)", "O(3)"}, {"SU(3)", "su(3)", "U(3)"}, {"Sq(3)", "sp(3)", "Sq(3)"}, {"F4", "f4", ""}}},
    {{{"SU(3)", "su(3)", "U(3)"}, {"SU(3)xSU(3)", "su(3)+su(3)", "written U(3)^2; semisimple part, dim 16"},
      {"SU(6)", "su(6)", "U(6)"}, {"E6", "e6", ""}}},
    {{{"Sq(3)", "sp(3)", "Sq(3)"}, {"SU(6)", "su(6)", "U(6)"}, {"SO(12)", "so(12)", "O(12)"}, {"E7", "e7", ""}}},
    {{{"F4", "f4", ""}, {"E6", "e6", ""}, {"E7", "e7", ""}, {"E8", "e8", "248 = 120 + 128"}}},
}};

constexpr std::array<std::array<const char*, 4>, 4> kLevel2Groups{{
    {"O(2)", "U(2)", "Sq(2)", "Spin(9)"},
    {"U(2)", "U(2)^2", "U(4)", "Spin(10)"},
    {"Sq(2)", "U(4)", "O(8)", "Spin(12)"},
    {"Spin(9)", "Spin(10)", "Spin(12)", "Spin(16)"},
}};
constexpr std::array<std::array<std::size_t, 4>, 4> kLevel2Dims{{
    {1, 4, 10, 36},
    {4, 8, 16, 45},
    {10, 16, 28, 66},
    {36, 45, 66, 120},
}};
// clang-format on

} // namespace

DerivationDims compute_derivation_dims(std::stop_token stop)
{
    DerivationDims out;
    for (std::size_t i = 0; i < kDivisionAlgebras.size(); ++i) {
        const auto k = composition::algebra_by_name(kDivisionAlgebras[i]);
        out.algebra[i] = lie::derivation_algebra(*k, stop).dim();
        out.jordan[i] = lie::derivation_algebra(*jordan::j3(kDivisionAlgebras[i]), stop).dim();
    }
    return out;
}

std::size_t tits_dim(std::size_t der_a, std::size_t dim_a, std::size_t der_j3b, std::size_t dim_j3b)
{
    return der_a + der_j3b + (dim_a - 1) * (dim_j3b - 1);
}

MagicSquare magic_square_level3(const DerivationDims& dims)
{
    MagicSquare sq;
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t dim_j3b = 3 + 3 * kDivisionAlgebraDims[b];
            const auto& label = kLevel3Labels[a][b];
            sq[a][b] = {kDivisionAlgebras[a],
                        kDivisionAlgebras[b],
                        tits_dim(dims.algebra[a], kDivisionAlgebraDims[a], dims.jordan[b], dim_j3b),
                        label.group,
                        label.lie,
                        label.note};
        }
    }
    return sq;
}

MagicSquare magic_square_level2()
{
    MagicSquare sq;
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            const std::string group = kLevel2Groups[a][b];
            sq[a][b] = {kDivisionAlgebras[a], kDivisionAlgebras[b], kLevel2Dims[a][b], group, "", ""};
        }
    }
    sq[3][3].note = "Spin(16) = Oct_O(2)";
    return sq;
}

bool is_symmetric(const MagicSquare& square)
{
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (square[a][b].lie_dim != square[b][a].lie_dim) {
                return false;
            }
        }
    }
    return true;
}

std::array<std::array<std::size_t, 4>, 4> dimension_matrix(const MagicSquare& square)
{
    std::array<std::array<std::size_t, 4>, 4> out{};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            out[a][b] = square[a][b].lie_dim;
        }
    }
    return out;
}

} // namespace atlas::catalog
