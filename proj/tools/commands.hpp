#pragma once

#include <iosfwd>

namespace kmstab::cli {

/// Runs the command line; returns the process exit code (0 ok, 1 usage,
/// 2 mathematical precondition, 3 internal invariant).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmstab::cli
