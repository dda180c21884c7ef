// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "pwlmip/cli/commands.h"

int main(int argc, char** argv) {
  return pwlmip::cli::run(argc, argv, std::cout, std::cerr);
}
