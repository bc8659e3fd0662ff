#include <iostream>

#include "fcx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fcx::cli::run(args, std::cout, std::cerr);
}
