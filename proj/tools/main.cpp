#include <iostream>

#include "flatspec/cli.hpp"

int main(int argc, char** argv) {
  const auto parsed = flatspec::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return flatspec::cli::run(*parsed.config, std::cout, std::cerr);
}
