#include <iostream>

#include "netosc/cli.hpp"

int main(int argc, char** argv) { return netosc::cli::run(argc, argv, std::cout, std::cerr); }
