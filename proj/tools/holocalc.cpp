#include <iostream>

#include "holocalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return holocalc::cli::run(args, std::cout, std::cerr);
}
