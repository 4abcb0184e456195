#include <iostream>

#include "rkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rkit::run_cli(args, std::cout, std::cerr);
}
