#include <iostream>
#include <string>
#include <vector>

#include "ordkernel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordkernel::run_cli(args, std::cout);
}
