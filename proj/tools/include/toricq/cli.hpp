#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricq::cli {

/// Runs one command (args exclude the program name). Writes the JSON result,
/// or {"error": ...}, to `out`; `in` backs the "-" input. Returns the exit
/// status: 0 success, 2 invalid input, 3 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

}  // namespace toricq::cli
