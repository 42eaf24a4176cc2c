#include <iostream>
#include <string>
#include <vector>

#include "coarse_menger/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coarse_menger::parse_and_dispatch(args, std::cout, std::cerr);
}
