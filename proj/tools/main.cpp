#include <iostream>

#include "tesler/cli.hpp"

int main(int argc, char** argv) { return tesler::cli::run(argc, argv, std::cout, std::cerr); }
