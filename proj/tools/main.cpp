#include <iostream>

#include "triplication/cli.hpp"

int main(int argc, char** argv) { return triplication::cli::run(argc, argv, std::cout, std::cerr); }
