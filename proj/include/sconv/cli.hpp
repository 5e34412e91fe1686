#pragma once

#include <ostream>

namespace sconv {

/// Parses argv, runs one of the run / convergence / stability /
/// compare-reference subcommands and returns the process exit status.
/// Diagnostics go to `err`, summaries and CSV without --out go to `out`.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sconv
