#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace atlas::cli {

enum class Status { pass, fail, skipped_budget };

std::string status_name(Status s);

struct CheckEntry {
    std::string id;
    Status status = Status::fail;
    std::string expected;
    std::string computed;
    double elapsed_seconds = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckEntry> checks;

    /// Skipped checks do not count as failures.
    bool pass() const;
    std::size_t count(Status s) const;
};

enum class Format { text, markdown, json };

Format parse_format(const std::string& name);

std::string render_reports(const std::vector<VerificationReport>& reports, Format format);

nlohmann::json report_json(const VerificationReport& r);

bool all_pass(const std::vector<VerificationReport>& reports);

} // namespace atlas::cli
