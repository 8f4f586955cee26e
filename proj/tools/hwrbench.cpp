#include <iostream>

#include "hwrbench/cli.hpp"

int main(int argc, char** argv) { return hwrbench::cli::run(argc, argv, std::cout, std::cerr); }
