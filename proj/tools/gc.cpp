#include "gc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gc::run_cli(argc, argv, std::cout, std::cerr); }
