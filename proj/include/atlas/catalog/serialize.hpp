#pragma once

#include "atlas/catalog/chains.hpp"
#include "atlas/catalog/groups.hpp"
#include "atlas/catalog/magic_square.hpp"
#include "atlas/catalog/spaces.hpp"

#include <json.hpp>

namespace atlas::catalog {

struct Atlas {
    std::vector<GroupRecord> groups;
    std::vector<FamilyRecord> families;
    std::vector<SymmetricSpaceRecord> exceptional_spaces;
    MagicSquare level2;
    MagicSquare level3;
    std::vector<ChainRecord> chains;
    friend bool operator==(const Atlas&, const Atlas&) = default;
};

/// Assembles every table; the level-3 square comes from the given derivation dims.
Atlas build_atlas(const DerivationDims& dims);

void to_json(nlohmann::json& j, const GroupRecord& g);
void from_json(const nlohmann::json& j, GroupRecord& g);
void to_json(nlohmann::json& j, const FamilyParams& p);
void from_json(const nlohmann::json& j, FamilyParams& p);
void to_json(nlohmann::json& j, const FamilyRecord& f);
void from_json(const nlohmann::json& j, FamilyRecord& f);
void to_json(nlohmann::json& j, const SymmetricSpaceRecord& r);
void from_json(const nlohmann::json& j, SymmetricSpaceRecord& r);
void to_json(nlohmann::json& j, const MagicSquareCell& c);
void from_json(const nlohmann::json& j, MagicSquareCell& c);
void to_json(nlohmann::json& j, const ChainRecord& c);
void from_json(const nlohmann::json& j, ChainRecord& c);
void to_json(nlohmann::json& j, const Atlas& a);
void from_json(const nlohmann::json& j, Atlas& a);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

} // namespace atlas::catalog
