#pragma once

#include <iosfwd>

namespace minedit::cli {

/// Runs the `minedit` command line. Exit codes: 0 success, 1 validation
/// failure (bad input, bad arguments), 2 I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace minedit::cli
