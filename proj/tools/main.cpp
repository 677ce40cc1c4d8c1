// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "torusconj/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return torusconj::cli::run(args, std::cout, std::cerr, std::cin);
}
