#include <iostream>
#include <string>
#include <vector>

#include "deg2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deg2::run_command(args, std::cout, std::cerr);
}
