#include <iostream>

#include "bmres/cli.hpp"

int main(int argc, char** argv) { return bmres::cli::run(argc, argv, std::cout, std::cerr); }
