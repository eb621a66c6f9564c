#include <iostream>

#include "dres/cli.hpp"

int main(int argc, char** argv) { return dres::cli::run(argc, argv, std::cout, std::cerr); }
