#include <iostream>

#include "fermatlines/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fermatlines::cli::run_cli(args, std::cout, std::cerr);
}
