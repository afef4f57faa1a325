#include <iostream>
#include <string>
#include <vector>

#include "inqkh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inqkh::runCommand(args, std::cout, std::cerr);
}
