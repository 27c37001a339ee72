#include <iostream>
#include <string>
#include <vector>

#include "fairdiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fairdiv::cli_main(std::move(args), std::cout, std::cerr);
}
