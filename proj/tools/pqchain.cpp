#include <iostream>

#include "pqchain/cli/emit.hpp"

int main(int argc, char** argv) { return pqchain::cli::run(argc, argv, std::cout, std::cerr); }
