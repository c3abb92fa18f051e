#include <iostream>
#include <string>
#include <vector>

#include "jury/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jury::cli::run(args, std::cout, std::cerr);
}
