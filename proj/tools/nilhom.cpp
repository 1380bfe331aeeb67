#include <iostream>
#include <vector>

#include "nilhom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilhom::run_cli(args, std::cout, std::cerr);
}
