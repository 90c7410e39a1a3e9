#include <iostream>
#include <string>
#include <vector>

#include "renyi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return renyi::cli_main(args, std::cout, std::cerr);
}
