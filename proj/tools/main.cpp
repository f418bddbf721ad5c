#include "cayley_ht/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cayley_ht::run_cli(argc, argv, std::cout, std::cerr); }
