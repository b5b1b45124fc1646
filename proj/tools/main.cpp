#include <iostream>
#include <string>
#include <vector>

#include "pontryagin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pontryagin::run(args, std::cout, std::cerr);
}
