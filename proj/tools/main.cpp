#include <iostream>

#include "gcat/cli.hpp"

int main(int argc, char** argv) { return gcat::run_cli(argc, argv, std::cout, std::cerr); }
