#include <iostream>
#include <string>
#include <vector>

#include "folclass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return folclass::run(args, std::cout, std::cerr);
}
