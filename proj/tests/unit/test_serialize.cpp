#include "atlas/catalog/serialize.hpp"

#include <doctest.h>

using namespace atlas::catalog;
using nlohmann::json;

namespace {

DerivationDims sample_dims()
{
    return {{0, 0, 3, 14}, {3, 8, 21, 52}};
}

} // namespace

TEST_CASE("atlas JSON round trip")
{
    const auto atlas = build_atlas(sample_dims());
    const auto text = canonical_dump(json(atlas));
    const auto back = json::parse(text).get<Atlas>();
    CHECK(back == atlas);
    CHECK(canonical_dump(json(back)) == text);
    CHECK(text.back() == '\n');
}

TEST_CASE("top-level keys are sorted and complete")
{
    const json j = build_atlas(sample_dims());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"chains", "exceptional_spaces", "families", "groups", "magic_squares"});
    CHECK(j["exceptional_spaces"].size() == 12);
    CHECK(j["magic_squares"]["level3"][3][3]["lie_dim"] == 248);
}

TEST_CASE("optional fields serialize as null")
{
    SymmetricSpaceRecord r;
    r.cartan_label = "X";
    const json j = r;
    CHECK(j["rank"].is_null());
    CHECK(j["family_params"].is_null());
    CHECK(j.get<SymmetricSpaceRecord>() == r);
    r.rank = 3;
    r.family_params = FamilyParams{0, 2, 5};
    CHECK(json(r).get<SymmetricSpaceRecord>() == r);
}

TEST_CASE("malformed documents are rejected")
{
    json j = build_atlas(sample_dims());
    j.erase("chains");
    CHECK_THROWS(j.get<Atlas>());
}
