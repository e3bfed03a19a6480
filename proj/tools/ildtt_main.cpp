#include <iostream>

#include "ildtt/cli.hpp"

int main(int argc, char** argv) {
  return ildtt::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
