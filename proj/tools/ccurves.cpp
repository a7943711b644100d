#include <iostream>
#include <string>
#include <vector>

#include "ccurves/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ccurves::cli::run(args, std::cout, std::cerr);
}
