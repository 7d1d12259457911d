#include "fracheat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fracheat::run_cli(argc, argv, std::cout, std::cerr); }
