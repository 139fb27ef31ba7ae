// vecgo command-line tool; see README.md for the command reference.
#include <iostream>

#include "vecgo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vecgo::cli::run(args, std::cout, std::cerr);
}
