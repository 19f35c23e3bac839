#include <iostream>
#include <string>
#include <vector>

#include "psmono/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return psmono::run_cli(args, std::cout, std::cerr);
}
