#include <iostream>
#include <string>
#include <vector>

#include "bicomm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bicomm::cli::run(args, std::cout, std::cerr);
}
