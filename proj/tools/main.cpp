/* main.cpp -- command line entry point.
 *
 * Copyright (c) 2026 The endgraph authors.
 * Distributed under the MIT License (see LICENSE).
 */
#include <iostream>

#include "cli.hpp"

int main(int argc, char **argv) { return endgraph::cli::run(argc, argv, std::cout, std::cerr); }
