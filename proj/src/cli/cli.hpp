#pragma once

#include <iosfwd>

namespace splitsteiner::cli {

/// Exit codes of the splitsteiner tool.
enum ExitCode : int {
    ok = 0,
    io_error = 1, ///< unreadable file, malformed input or bad flags
    not_split = 2,
    hard_instance = 3, ///< split but not K_{1,4}-free, and no fallback
};

/// Runs the tool with the given arguments. Everything is written to `out`
/// and `err`, so it can be driven in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace splitsteiner::cli
