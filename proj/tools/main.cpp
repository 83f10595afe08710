#include <iostream>
#include <string>
#include <vector>

#include "quadrange/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quadrange::run(args, std::cout, std::cerr);
}
