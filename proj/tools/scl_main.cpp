#include <iostream>
#include <vector>

#include "scl/cliapp.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scl::run_cli(args, std::cout, std::cerr);
}
