#include <iostream>
#include <string>
#include <vector>

#include "branchcones/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return branchcones::run_cli(args, std::cout, std::cerr);
}
