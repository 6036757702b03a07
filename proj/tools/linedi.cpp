#include <iostream>
#include <string>
#include <vector>

#include "linedi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return linedi::cli::run(args, std::cout, std::cerr);
}
