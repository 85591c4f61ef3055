#include <cstdlib>
#include <iostream>

#include "kgraphkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* b = std::getenv("KGRAPHKIT_BUDGET")) env = b;
  const kgraphkit::RunResult r = kgraphkit::run(args, env);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
