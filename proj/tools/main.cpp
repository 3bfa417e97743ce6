// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "egyptian/cli.hpp"

int main(int argc, char** argv) {
  return egyptian::cli::run(argc, argv, std::cout, std::cerr);
}
