#pragma once

#include <iosfwd>

namespace symplt::cli {

/// Entry point of the `symplt` tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symplt::cli
