#include <iostream>

#include "mzent/cli/cli.hpp"

int main(int argc, char** argv) { return mzent::cli::run(argc, argv, std::cout, std::cerr); }
