#include <iostream>

#include "ckq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ckq::run_cli(args, std::cout, std::cerr);
}
