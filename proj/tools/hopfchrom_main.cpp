#include <iostream>

#include "hopfchrom/cli.hpp"

int main(int argc, char** argv) {
  return hopfchrom::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
