#pragma once

#include "atlas/catalog/magic_square.hpp"
#include "atlas/cli/report.hpp"
#include "atlas/cli/workbench.hpp"

#include <optional>
#include <string>
#include <vector>

namespace atlas::cli {

/// Suite names in report order.
const std::vector<std::string>& suite_names();

VerificationReport run_suite(const std::string& name, Workbench& bench);

/// "all" or a single suite. Suites run concurrently; reports come back in
/// suite_names() order.
std::vector<VerificationReport> run_scope(const std::string& scope, Workbench& bench);

/// Live derivation dims for the level-3 square; nullopt if any ran out of budget.
std::optional<catalog::DerivationDims> derivation_dims(Workbench& bench);

} // namespace atlas::cli
