#include <iostream>
#include <string>
#include <vector>

#include "sidon2d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sidon2d::cli::run(args, std::cin, std::cout, std::cerr);
}
