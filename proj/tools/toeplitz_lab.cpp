#include <iostream>

#include "tlab/cli.hpp"

int main(int argc, char** argv) { return tlab::run_cli(argc, argv, std::cout, std::cerr); }
