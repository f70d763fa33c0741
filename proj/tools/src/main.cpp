#include <iostream>

#include "nakayama_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nakayama::cli::run(args, std::cout, std::cerr);
}
