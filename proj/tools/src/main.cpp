#include <iostream>
#include <string>
#include <vector>

#include "toricq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricq::cli::run(args, std::cout, std::cin);
}
