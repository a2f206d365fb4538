#include <iostream>
#include <vector>

#include "tropid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropid::cli::run(args, std::cout, std::cerr);
}
