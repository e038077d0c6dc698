#pragma once

#include <iosfwd>

namespace slc::cli {

/// Runs one subcommand. Returns 0 on success, 2 when the spec fails
/// validation or an operation's class precondition (the report is still
/// written), 1 on usage errors and unreadable input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slc::cli
