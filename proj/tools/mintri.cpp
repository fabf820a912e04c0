#include <iostream>

#include "mintri/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const int code = mintri::cli::run({argv + 1, argv + argc}, std::cout);
  std::cout.flush();
  return code;
}
