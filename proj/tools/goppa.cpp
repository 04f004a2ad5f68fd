#include <iostream>

#include "wildgoppa/cli.hpp"

int main(int argc, char** argv) { return wildgoppa::run_cli(argc, argv, std::cout, std::cerr); }
