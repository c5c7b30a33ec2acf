#include <iostream>
#include <string>
#include <vector>

#include "mmcwpa/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return mmcwpa::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
