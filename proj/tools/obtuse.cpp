#include <iostream>

#include "obtuse/cli.hpp"

int main(int argc, char** argv) { return obtuse::cli::run(argc, argv, std::cout, std::cerr); }
