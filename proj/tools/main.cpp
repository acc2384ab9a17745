#include <iostream>
#include <string>
#include <vector>

#include "abelstrata/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abelstrata::run_cli(args, std::cout, std::cerr);
}
