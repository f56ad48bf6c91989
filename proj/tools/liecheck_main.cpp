#include <iostream>
#include <string>
#include <vector>

#include "liecheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liecheck::run(args, std::cout, std::cerr);
}
