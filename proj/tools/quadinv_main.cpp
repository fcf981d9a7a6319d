#include <iostream>
#include <string>
#include <vector>

#include "quadinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quadinv::run(args, std::cout, std::cerr);
}
