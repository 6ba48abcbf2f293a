#include <iostream>

#include "qk/cli.hpp"

int main(int argc, char** argv) { return qk::cli_main(argc, argv, std::cout, std::cerr); }
