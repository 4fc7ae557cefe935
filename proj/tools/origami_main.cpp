#include <iostream>

#include "origami/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return origami::cli::run(args, std::cout, std::cerr);
}
