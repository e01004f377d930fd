#include <iostream>

#include "hopfbrauer/cli.hpp"

int main(int argc, char** argv) { return hopfbrauer::run_cli(argc, argv, std::cout, std::cerr); }
