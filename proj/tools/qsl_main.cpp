#include <iostream>

#include "qsl/cli.hpp"

int main(int argc, char** argv) {
  return qsl::run_cli(argc, argv, std::cout, std::cerr);
}
