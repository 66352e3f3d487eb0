#include <iostream>
#include <string>
#include <vector>

#include "plumb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return plumb::run_command(args, std::cout, std::cerr);
}
