#include <iostream>

#include "slitfactor/cli.hpp"

int main(int argc, char** argv) { return slitfactor::run_cli(argc, argv, std::cout, std::cerr); }
