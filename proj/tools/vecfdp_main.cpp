
#include <iostream>

#include "vecfdp/cli.hpp"

int main(int argc, char** argv) { return vecfdp::run_cli(argc, argv, std::cout, std::cerr); }
