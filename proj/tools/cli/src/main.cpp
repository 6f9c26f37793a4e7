#include <iostream>

#include "tendo/cli/app.hpp"

int main(int argc, char** argv) { return tendo::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
