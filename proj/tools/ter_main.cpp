#include <iostream>

#include "ter/cli.hpp"

int main(int argc, char** argv) { return ter::cli::run(argc, argv, std::cout, std::cerr); }
