#include <iostream>
#include <string>
#include <vector>

#include "qbracket/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qbracket::run(args, std::cout, std::cerr);
}
