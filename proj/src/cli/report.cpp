#include "atlas/cli/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace atlas::cli {

namespace {

std::string seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

std::string escape_cell(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else {
            out += c;
        }
    }
    return out;
}

std::string summary_line(const VerificationReport& r)
{
    std::string line = r.suite + ": " + std::to_string(r.count(Status::pass)) + "/" +
                       std::to_string(r.checks.size()) + " passed";
    if (const auto skipped = r.count(Status::skipped_budget)) {
        line += ", " + std::to_string(skipped) + " skipped (budget)";
    }
    return line;
}

} // namespace

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped_budget:
        return "skipped (budget)";
    }
    return "fail";
}

bool VerificationReport::pass() const
{
    return count(Status::fail) == 0;
}

std::size_t VerificationReport::count(Status s) const
{
    std::size_t n = 0;
    for (const auto& c : checks) {
        n += c.status == s;
    }
    return n;
}

Format parse_format(const std::string& name)
{
    if (name == "text") return Format::text;
    if (name == "markdown") return Format::markdown;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

bool all_pass(const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports) {
        if (!r.pass()) {
            return false;
        }
    }
    return true;
}

nlohmann::json report_json(const VerificationReport& r)
{
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"id", c.id},
                          {"status", status_name(c.status)},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"elapsed_seconds", c.elapsed_seconds}});
    }
    return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", std::move(checks)}};
}

std::string render_reports(const std::vector<VerificationReport>& reports, Format format)
{
    std::string out;
    if (format == Format::json) {
        auto suites = nlohmann::json::array();
        for (const auto& r : reports) {
            suites.push_back(report_json(r));
        }
        return nlohmann::json{{"pass", all_pass(reports)}, {"suites", std::move(suites)}}.dump(2) + "\n";
    }
    for (const auto& r : reports) {
        if (format == Format::markdown) {
            out += "## " + r.suite + "\n\n";
            out += "| check | status | expected | computed | elapsed |\n";
            out += "|---|---|---|---|---|\n";
            for (const auto& c : r.checks) {
                out += "| " + escape_cell(c.id) + " | " + status_name(c.status) + " | " + escape_cell(c.expected) +
                       " | " + escape_cell(c.computed) + " | " + seconds(c.elapsed_seconds) + " |\n";
            }
            out += "\n" + summary_line(r) + "\n\n";
        } else {
            out += "[" + r.suite + "]\n";
            for (const auto& c : r.checks) {
                std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
                out += "  " + tag + "  " + c.id + "  expected " + c.expected + "; computed " + c.computed + "  (" +
                       seconds(c.elapsed_seconds) + ")\n";
            }
            out += summary_line(r) + "\n\n";
        }
    }
    out += std::string("overall: ") + (all_pass(reports) ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace atlas::cli
