#include <iostream>

#include "midlevel/cli.hpp"

int main(int argc, char** argv) { return midlevel::run_cli(argc, argv, std::cout, std::cerr); }
