#include <iostream>

#include "powstr/cli.hpp"

int main(int argc, char **argv) {
  return powstr::cli::run(argc, argv, std::cout, std::cerr);
}
