#include <iostream>

#include "weylcells/cli.hpp"

int main(int argc, char** argv) { return weylcells::cli::run(argc, argv, std::cout, std::cerr); }
