#include <iostream>

#include "cubicrig/cli.hpp"

int main(int argc, char** argv) { return cubicrig::cli::main_entry(argc, argv, std::cout, std::cerr); }
