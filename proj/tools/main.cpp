#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv, argv + argc);
  const auto parsed = glmn::cli::parse_args(args);
  if (!parsed.config) {
    (parsed.exit_code == glmn::cli::kExitOk ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  return glmn::cli::run(*parsed.config, std::cin, std::cout, std::cerr);
}
