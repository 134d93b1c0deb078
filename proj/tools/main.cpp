#include <iostream>
#include <string>
#include <vector>

#include "owm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return owm::cli::run(args, std::cout, std::cerr);
}
