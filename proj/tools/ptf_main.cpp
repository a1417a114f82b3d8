#include <iostream>

#include "ptf/cli.hpp"

int main(int argc, char** argv) { return ptf::run_cli(argc, argv, std::cout, std::cerr); }
