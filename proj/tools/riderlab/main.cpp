#include "riderlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return riderlab::run(argc, argv, std::cout, std::cerr); }
