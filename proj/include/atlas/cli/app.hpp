#pragma once

#include <iosfwd>

namespace atlas::cli {

/// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace atlas::cli
