#include <iostream>

#include "latstack/cli.hpp"

int main(int argc, char** argv) { return latstack::cli_main(argc, argv, std::cout, std::cerr); }
