#include <iostream>

#include "ktf/cli.hpp"

int main(int argc, char **argv) {
  return ktf::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
