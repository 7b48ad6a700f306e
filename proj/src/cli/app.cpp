#include "atlas/cli/app.hpp"

#include "atlas/cli/suites.hpp"
#include "atlas/cli/tables.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace atlas::cli {

namespace {

std::vector<std::string> with_all(std::vector<std::string> names)
{
    names.insert(names.begin(), "all");
    return names;
}

nlohmann::json basis_json(const lie::LieAlgebraBasis& l)
{
    auto basis = nlohmann::json::array();
    for (const auto& m : l.basis()) {
        auto rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            auto cells = nlohmann::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) {
                cells.push_back(linalg::to_string(m(r, c)));
            }
            rows.push_back(std::move(cells));
        }
        basis.push_back(std::move(rows));
    }
    return basis;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of composition, Jordan and exceptional Lie algebra data", "atlas"};
    app.require_subcommand(1);

    std::string format;
    RunOptions options;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "markdown", "json"}));
    app.add_option("--seed", options.seed, "Seed for randomized checks")->envname("ATLAS_SEED");
    app.add_option("--trials", options.trials, "Samples per randomized check")->check(CLI::PositiveNumber);
    app.add_option("--budget", options.budget_seconds, "Seconds allowed for each derivation algebra")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--inject-corrupt", options.inject_corrupt, "Add a corrupted atlas record")->group("");

    std::string scope;
    auto* verify = app.add_subcommand("verify", "Run verification suites")->fallthrough();
    verify->add_option("scope", scope, "Suite to run")->required()->check(CLI::IsMember(with_all(suite_names())));

    std::string table;
    auto* table_cmd = app.add_subcommand("table", "Render an atlas table")->fallthrough();
    table_cmd->add_option("name", table, "Table name")->required()->check(CLI::IsMember(table_names()));

    std::string target;
    bool emit_basis = false;
    std::vector<std::string> target_names;
    for (const auto& t : derive_targets()) {
        target_names.push_back(t.cli_name);
    }
    auto* derive = app.add_subcommand("derive", "Compute a derivation algebra")->fallthrough();
    derive->add_option("target", target, "Algebra")->required()->check(CLI::IsMember(target_names));
    derive->add_flag("--emit-basis", emit_basis, "Dump the canonical echelon basis as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Workbench bench(options);
        if (verify->parsed()) {
            const auto reports = run_scope(scope, bench);
            out << render_reports(reports, parse_format(format.empty() ? "text" : format));
            return all_pass(reports) ? 0 : 1;
        }
        if (table_cmd->parsed()) {
            out << render_table(table, parse_format(format.empty() ? "markdown" : format), bench);
            return 0;
        }
        const auto& t = derive_target(target);
        const auto l = bench.derivations(t.key);
        if (!l) {
            err << "Der(" << t.key << "): skipped (budget of " << options.budget_seconds << " s exceeded)\n";
            return 1;
        }
        if (emit_basis || format == "json") {
            nlohmann::json doc{{"target", t.cli_name}, {"algebra", t.key}, {"dim", l->dim()}};
            if (emit_basis) {
                doc["ambient_dim"] = l->ambient_dim();
                doc["basis"] = basis_json(*l);
            }
            out << doc.dump(2) << "\n";
        } else {
            out << "Der(" << t.key << ") = " << l->dim() << "\n";
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace atlas::cli
