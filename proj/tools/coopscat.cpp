#include <iostream>

#include "coopscat/cli.hpp"

int main(int argc, char** argv) {
  return coopscat::cli::run(argc, argv, std::cout, std::cerr);
}
