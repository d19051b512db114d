#include <iostream>

#include "degen/cli.hpp"

int main(int argc, char** argv) { return degen::cli::run(argc, argv, std::cout, std::cerr); }
