#include "atlas/catalog/groups.hpp"
#include "atlas/catalog/magic_square.hpp"

#include <doctest.h>

using namespace atlas::catalog;

namespace {

const DerivationDims& live_dims()
{
    static const auto dims = compute_derivation_dims();
    return dims;
}

} // namespace

TEST_CASE("derivation dims come from the solver")
{
    CHECK(live_dims().algebra == std::array<std::size_t, 4>{0, 0, 3, 14});
    CHECK(live_dims().jordan == std::array<std::size_t, 4>{3, 8, 21, 52});
}

TEST_CASE("Tits formula cells")
{
    CHECK(tits_dim(14, 8, 52, 27) == 248);
    CHECK(tits_dim(14, 8, 8, 9) == 78);
    CHECK(tits_dim(0, 2, 52, 27) == 78);
    CHECK(tits_dim(0, 1, 3, 6) == 3);
}

TEST_CASE("level 3 square")
{
    const auto sq = magic_square_level3(live_dims());
    const std::array<std::array<std::size_t, 4>, 4> expected{{
        {3, 8, 21, 52},
        {8, 16, 35, 78},
        {21, 35, 66, 133},
        {52, 78, 133, 248},
    }};
    CHECK(dimension_matrix(sq) == expected);
    CHECK(is_symmetric(sq));
    CHECK(sq[3][1].row_algebra == "O");
    CHECK(sq[3][1].col_algebra == "C");
    for (const auto& row : sq) {
        for (const auto& cell : row) {
            CHECK_MESSAGE(group_dim(cell.group_label) == cell.lie_dim, cell.group_label);
        }
    }
    CHECK(sq[3][0].group_label == "F4");
    CHECK(sq[3][3].group_label == "E8");
}

TEST_CASE("level 2 square")
{
    const auto sq = magic_square_level2();
    CHECK(is_symmetric(sq));
    CHECK(sq[3][3].lie_dim == 120);
    CHECK(sq[3][3].group_label == "Spin(16)");
    for (const auto& row : sq) {
        for (const auto& cell : row) {
            CHECK_MESSAGE(group_dim(cell.group_label) == cell.lie_dim, cell.group_label);
        }
    }
}

TEST_CASE("asymmetry is detected")
{
    auto sq = magic_square_level2();
    sq[0][1].lie_dim += 1;
    CHECK_FALSE(is_symmetric(sq));
}
