#pragma once

#include <ostream>

namespace umbral::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, domain = 3 };

/// Entry point of the `umbral` tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace umbral::cli
