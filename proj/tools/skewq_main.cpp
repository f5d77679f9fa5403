#include <iostream>
#include <string>
#include <vector>

#include "skewq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewq::run_cli(args, std::cout, std::cerr);
}
