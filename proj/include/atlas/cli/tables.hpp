#pragma once

#include "atlas/cli/report.hpp"
#include "atlas/cli/workbench.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace atlas::cli {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& table_names();

/// Markdown (also used for text) or canonical JSON. Byte-stable for a fixed
/// atlas. Throws BudgetExceeded if the magic square needs a derivation that
/// ran out of budget.
std::string render_table(const std::string& name, Format format, Workbench& bench);

} // namespace atlas::cli
