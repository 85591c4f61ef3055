#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kgraphkit {

struct RunResult {
  std::string out;
  std::string err;
  int exit_code = 0;  // 0 success, 1 analysis-level negative, 2 usage error
};

/// Runs `kgraphkit <command> <file> [flags]`; `args` excludes the program
/// name. `env_budget` is the value of KGRAPHKIT_BUDGET, if set.
RunResult run(const std::vector<std::string>& args, const std::optional<std::string>& env_budget = std::nullopt);

}  // namespace kgraphkit
