#include <iostream>

#include "pfpoly/cli.hpp"

int main(int argc, char** argv) { return pfpoly::cli::run(argc, argv, std::cout, std::cerr); }
