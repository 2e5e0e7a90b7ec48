#include <iostream>

#include "gearsynth/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return gearsynth::cli::run(argc, argv, std::cout, std::cerr);
}
