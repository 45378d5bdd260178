#include <iostream>

#include "umbral/cli/commands.hpp"

int main(int argc, char** argv) { return umbral::cli::run(argc, argv, std::cout, std::cerr); }
