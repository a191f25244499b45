#include <iostream>
#include <string>
#include <vector>

#include "udg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return udg::cli_main(args, std::cout, std::cerr);
}
