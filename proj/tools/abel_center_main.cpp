#include <iostream>
#include <string>
#include <vector>

#include "abel_center/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abel_center::run_cli(args, std::cout, std::cerr);
}
