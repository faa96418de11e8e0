#include <iostream>

#include "qkchev/cli.hpp"

int main(int argc, char** argv) {
  return qkchev::cli_run(argc, argv, std::cout, std::cerr);
}
