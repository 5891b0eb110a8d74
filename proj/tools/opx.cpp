#include <iostream>
#include <string>
#include <vector>

#include "opx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return opx::run_cli(args, std::cout, std::cerr);
}
