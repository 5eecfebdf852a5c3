#include <iostream>
#include <string>
#include <vector>

#include "pcgroup/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcgroup::cli::run(std::move(args), std::cout, std::cerr);
}
