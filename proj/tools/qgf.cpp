#include <iostream>
#include <string>
#include <vector>

#include "qgf/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qgf::cli::run(args, std::cout, std::cerr);
}
