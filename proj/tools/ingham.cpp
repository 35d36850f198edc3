#include "ingham/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return ingham::run_cli(argc, argv, std::cout, std::cerr); }
