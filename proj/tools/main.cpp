#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return spadic::cli::run(argc, argv, std::cout, std::cerr); }
