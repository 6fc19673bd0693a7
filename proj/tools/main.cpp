#include <iostream>

#include "ymh/cli.hpp"

int main(int argc, char** argv) {
  return ymh::cli_main(argc, argv, std::cout, std::cerr);
}
