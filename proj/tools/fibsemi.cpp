#include <iostream>

#include "fibsemi/cli.hpp"

int main(int argc, char** argv) { return fibsemi::cli::run(argc, argv, std::cout, std::cerr); }
