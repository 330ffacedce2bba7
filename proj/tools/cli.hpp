#pragma once

#include <iosfwd>

namespace pgc::tools {

enum ExitCode { kOk = 0, kValidation = 1, kInconsistent = 2, kIo = 3 };

/// Entry point of the command-line tool; machine JSON goes to `out`, tables
/// and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgc::tools
