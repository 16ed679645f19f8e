#include <iostream>

#include "eulerian/cli.hpp"

int main(int argc, char** argv) { return eulerian::run_cli(argc, argv, std::cout, std::cerr); }
