#include "torsionlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return torsionlab::cli::run(argc, argv, std::cout, std::cerr); }
