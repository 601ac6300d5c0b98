#include <iostream>
#include <string>
#include <vector>

#include "gammasym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gammasym::cli::main(args, std::cout, std::cerr);
}
