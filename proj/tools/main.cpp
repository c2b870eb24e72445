#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return e6kkr::cli::run(argc, argv, std::cout, std::cerr); }
