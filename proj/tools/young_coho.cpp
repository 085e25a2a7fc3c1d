#include <iostream>

#include "youngcoho/cli.hpp"

int main(int argc, char** argv) { return youngcoho::run_cli(argc, argv, std::cout, std::cerr); }
