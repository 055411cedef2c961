#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace choicekit::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3 };

struct CliConfig {
  std::string logic = "qcl";
  std::string format = "json";
  std::size_t var_cap = 22;
  std::uint64_t seed = 0;
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace choicekit::cli
