#include <iostream>
#include <string>
#include <vector>

#include "uqosp/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uqosp::run_command(args, std::cout, std::cerr);
}
