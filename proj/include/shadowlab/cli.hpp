#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowlab::cli {

/// Runs one command-line invocation. Results go to `out`, diagnostics to
/// `err`. Exit codes: 0 success, 1 runtime failure, 2 usage error.
/// Identical args (including --seed) produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shadowlab::cli
