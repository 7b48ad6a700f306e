#include "atlas/catalog/serialize.hpp"

namespace atlas::catalog {

using nlohmann::json;

Atlas build_atlas(const DerivationDims& dims)
{
    return {group_catalog(),       classical_families(),     exceptional_atlas(),
            magic_square_level2(), magic_square_level3(dims), supergravity_chain()};
}

void to_json(json& j, const GroupRecord& g)
{
    j = json{{"name", g.name}, {"series", g.series}, {"dim", g.dim}, {"rank", g.rank}, {"exponents", g.exponents}};
}

void from_json(const json& j, GroupRecord& g)
{
    j.at("name").get_to(g.name);
    j.at("series").get_to(g.series);
    j.at("dim").get_to(g.dim);
    j.at("rank").get_to(g.rank);
    j.at("exponents").get_to(g.exponents);
}

void to_json(json& j, const FamilyParams& p)
{
    j = json{{"n", p.n}, {"p", p.p}, {"q", p.q}};
}

void from_json(const json& j, FamilyParams& p)
{
    j.at("n").get_to(p.n);
    j.at("p").get_to(p.p);
    j.at("q").get_to(p.q);
}

void to_json(json& j, const FamilyRecord& f)
{
    j = json{{"cartan_label", f.cartan_label},
             {"quotient", f.quotient},
             {"dim_formula", f.dim_formula},
             {"two_parameter", f.two_parameter}};
}

void from_json(const json& j, FamilyRecord& f)
{
    j.at("cartan_label").get_to(f.cartan_label);
    j.at("quotient").get_to(f.quotient);
    j.at("dim_formula").get_to(f.dim_formula);
    j.at("two_parameter").get_to(f.two_parameter);
}

void to_json(json& j, const SymmetricSpaceRecord& r)
{
    j = json{{"cartan_label", r.cartan_label},
             {"name", r.name},
             {"numerator", r.numerator},
             {"denominator", r.denominator},
             {"abelian_dim", r.abelian_dim},
             {"dim", r.dim},
             {"rank", nullptr},
             {"rank_source", r.rank_source},
             {"family_params", nullptr},
             {"notes", r.notes}};
    if (r.rank) {
        j["rank"] = *r.rank;
    }
    if (r.family_params) {
        j["family_params"] = *r.family_params;
    }
}

void from_json(const json& j, SymmetricSpaceRecord& r)
{
    j.at("cartan_label").get_to(r.cartan_label);
    j.at("name").get_to(r.name);
    j.at("numerator").get_to(r.numerator);
    j.at("denominator").get_to(r.denominator);
    j.at("abelian_dim").get_to(r.abelian_dim);
    j.at("dim").get_to(r.dim);
    r.rank = j.at("rank").is_null() ? std::nullopt : std::optional(j.at("rank").get<std::size_t>());
    j.at("rank_source").get_to(r.rank_source);
    r.family_params = j.at("family_params").is_null() ? std::nullopt
                                                       : std::optional(j.at("family_params").get<FamilyParams>());
    j.at("notes").get_to(r.notes);
}

void to_json(json& j, const MagicSquareCell& c)
{
    j = json{{"row_algebra", c.row_algebra}, {"col_algebra", c.col_algebra}, {"lie_dim", c.lie_dim},
             {"group_label", c.group_label}, {"lie_label", c.lie_label},     {"note", c.note}};
}

void from_json(const json& j, MagicSquareCell& c)
{
    j.at("row_algebra").get_to(c.row_algebra);
    j.at("col_algebra").get_to(c.col_algebra);
    j.at("lie_dim").get_to(c.lie_dim);
    j.at("group_label").get_to(c.group_label);
    j.at("lie_label").get_to(c.lie_label);
    j.at("note").get_to(c.note);
}

void to_json(json& j, const ChainRecord& c)
{
    j = json{{"spacetime_dim", c.spacetime_dim},       {"split_group", c.split_group},
             {"compact_subgroup", c.compact_subgroup}, {"compact_dim", c.compact_dim},
             {"scalar_count", c.scalar_count},         {"notes", c.notes}};
}

void from_json(const json& j, ChainRecord& c)
{
    j.at("spacetime_dim").get_to(c.spacetime_dim);
    j.at("split_group").get_to(c.split_group);
    j.at("compact_subgroup").get_to(c.compact_subgroup);
    j.at("compact_dim").get_to(c.compact_dim);
    j.at("scalar_count").get_to(c.scalar_count);
    j.at("notes").get_to(c.notes);
}

void to_json(json& j, const Atlas& a)
{
    j = json{{"groups", a.groups},
             {"families", a.families},
             {"exceptional_spaces", a.exceptional_spaces},
             {"magic_squares", {{"level2", a.level2}, {"level3", a.level3}}},
             {"chains", a.chains}};
}

void from_json(const json& j, Atlas& a)
{
    j.at("groups").get_to(a.groups);
    j.at("families").get_to(a.families);
    j.at("exceptional_spaces").get_to(a.exceptional_spaces);
    j.at("magic_squares").at("level2").get_to(a.level2);
    j.at("magic_squares").at("level3").get_to(a.level3);
    j.at("chains").get_to(a.chains);
}

std::string canonical_dump(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace atlas::catalog
