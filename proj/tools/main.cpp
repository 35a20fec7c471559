#include <iostream>
#include <string>
#include <vector>

#include "mgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mgraph::run_cli(args, std::cout, std::cerr);
}
