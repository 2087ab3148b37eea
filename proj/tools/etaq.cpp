#include <iostream>

#include "etaq/cli.hpp"

int main(int argc, char** argv) { return etaq::run_cli(argc, argv, std::cout, std::cerr); }
