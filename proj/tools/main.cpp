// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return ptw_cli::dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
