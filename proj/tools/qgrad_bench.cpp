#include <iostream>

#include "qgrad/cli.hpp"

int main(int argc, char** argv) { return qgrad::bench::cli_main(argc, argv, std::cout, std::cerr); }
