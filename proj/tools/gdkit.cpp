#include <iostream>
#include <string>
#include <vector>

#include "gdkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gdkit::cli::run(args, std::cout, std::cerr);
}
