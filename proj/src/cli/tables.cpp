#include "atlas/cli/tables.hpp"

#include "atlas/catalog/serialize.hpp"
#include "atlas/cli/suites.hpp"

namespace atlas::cli {

namespace {

using nlohmann::json;

std::string row(const std::vector<std::string>& cells)
{
    std::string out = "|";
    for (const auto& c : cells) {
        out += " " + c + " |";
    }
    return out + "\n";
}

std::string header(const std::vector<std::string>& cells)
{
    std::string out = row(cells) + "|";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out += "---|";
    }
    return out + "\n";
}

std::string square_markdown(const catalog::MagicSquare& sq, bool with_lie)
{
    std::vector<std::string> cols{"A \\ B"};
    for (const char* b : catalog::kDivisionAlgebras) {
        cols.emplace_back(b);
    }
    std::string out = header(cols);
    for (std::size_t a = 0; a < 4; ++a) {
        std::vector<std::string> cells{catalog::kDivisionAlgebras[a]};
        for (const auto& cell : sq[a]) {
            cells.push_back((with_lie ? cell.lie_label : cell.group_label) + " (" + std::to_string(cell.lie_dim) + ")");
        }
        out += row(cells);
    }
    return out;
}

json square_json(const catalog::MagicSquare& sq)
{
    json dims = catalog::dimension_matrix(sq);
    json groups = json::array();
    for (const auto& r : sq) {
        json labels = json::array();
        for (const auto& cell : r) {
            labels.push_back(cell.group_label);
        }
        groups.push_back(std::move(labels));
    }
    return {{"dims", std::move(dims)}, {"groups", std::move(groups)}};
}

catalog::MagicSquare level3(Workbench& bench)
{
    const auto dims = derivation_dims(bench);
    if (!dims) {
        throw BudgetExceeded("Der(J3(O)) exceeded the budget; the level-3 square is unavailable");
    }
    return catalog::magic_square_level3(*dims);
}

std::string magic_square(Format format, Workbench& bench)
{
    const auto l3 = level3(bench);
    const auto l2 = catalog::magic_square_level2();
    if (format == Format::json) {
        return catalog::canonical_dump({{"level2", square_json(l2)}, {"level3", square_json(l3)}});
    }
    std::string out = "## Magic square, level 3 (Tits formula)\n\n";
    out += square_markdown(l3, true);
    out += "\n";
    out += square_markdown(l3, false);
    out += "\n## Magic square, level 2\n\n";
    out += square_markdown(l2, false);
    return out;
}

std::string exceptional_spaces(Format format)
{
    const auto records = catalog::exceptional_atlas();
    if (format == Format::json) {
        return catalog::canonical_dump(json(records));
    }
    std::string out = "## Exceptional symmetric spaces\n\n";
    out += header({"label", "G/K", "dim G", "dim K", "dim", "rank", "rank source"});
    for (const auto& r : records) {
        const auto rep = catalog::verify_record(r);
        const auto g = catalog::group_dim(r.numerator);
        out += row({r.cartan_label, r.name, std::to_string(g), std::to_string(g - rep.computed), std::to_string(r.dim),
                    r.rank ? std::to_string(*r.rank) : "", r.rank_source});
    }
    return out;
}

std::string chains(Format format)
{
    const auto chain = catalog::supergravity_chain();
    if (format == Format::json) {
        return catalog::canonical_dump(json(chain));
    }
    std::string out = "## Supergravity scalar cosets\n\n";
    out += header({"d", "G", "K", "dim G", "dim K", "scalars"});
    for (const auto& c : chain) {
        const auto g = catalog::group_dim(c.split_group);
        const auto k = catalog::group_dim(c.compact_subgroup);
        out += row({std::to_string(c.spacetime_dim), c.split_group, c.compact_subgroup, std::to_string(g),
                    std::to_string(k), std::to_string(g - k)});
    }
    return out;
}

std::string families(Format format)
{
    const auto fams = catalog::classical_families();
    if (format == Format::json) {
        return catalog::canonical_dump(json(fams));
    }
    std::string out = "## Classical families\n\n";
    out += header({"label", "quotient", "dim", "examples"});
    for (const auto& f : fams) {
        std::string examples;
        if (f.two_parameter) {
            for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
                const catalog::FamilyParams params{0, static_cast<std::size_t>(p), static_cast<std::size_t>(q)};
                examples += (examples.empty() ? "" : ", ") + std::string("(") + std::to_string(p) + "," +
                            std::to_string(q) + ") " + std::to_string(catalog::family_space_dim(f.cartan_label, params));
            }
        } else {
            for (std::size_t n = 2; n <= 5; ++n) {
                examples += (examples.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " " +
                            std::to_string(catalog::family_space_dim(f.cartan_label, {n, 0, 0}));
            }
        }
        out += row({f.cartan_label, f.quotient, f.dim_formula, examples});
    }
    return out;
}

} // namespace

const std::vector<std::string>& table_names()
{
    static const std::vector<std::string> names{"magic-square", "exceptional-spaces", "chains", "families"};
    return names;
}

std::string render_table(const std::string& name, Format format, Workbench& bench)
{
    if (name == "magic-square") return magic_square(format, bench);
    if (name == "exceptional-spaces") return exceptional_spaces(format);
    if (name == "chains") return chains(format);
    if (name == "families") return families(format);
    throw std::invalid_argument("unknown table '" + name + "'");
}

} // namespace atlas::cli
