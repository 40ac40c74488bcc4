#include <iostream>

#include "affineqm/cli.hpp"

int main(int argc, char** argv) { return affineqm::cli::run(argc, argv, std::cout, std::cerr); }
