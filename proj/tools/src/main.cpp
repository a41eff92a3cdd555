#include <iostream>

#include "pdng_cli/cli.hpp"

int main(int argc, char** argv) {
  return pdng::cli::run(argc, argv, std::cout, std::cerr);
}
