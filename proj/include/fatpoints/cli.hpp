#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatpoints::cli {

// Runs one command-line invocation (argv without the program name) and
// returns the process exit code: 0 on success, 1 when the engine detects an
// internal inconsistency or theorem violation, 2 on input or usage errors.
// All output goes through the given streams so tests can drive the full
// interface in-process.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fatpoints::cli
