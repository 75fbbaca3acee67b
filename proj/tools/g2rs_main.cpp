#include <iostream>
#include <string>
#include <vector>

#include "g2rs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g2rs::run_command(args, std::cout, std::cerr);
}
