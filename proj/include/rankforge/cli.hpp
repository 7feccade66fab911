#pragma once

#include <iosfwd>

namespace rankforge::cli {

/// Parses argv and runs one subcommand. Returns 0 on success, 1 when a checked
/// statement fails (counterexample), 2 on usage or guard errors, 3 on internal errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rankforge::cli
