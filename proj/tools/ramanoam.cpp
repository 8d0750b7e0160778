#include <iostream>

#include "ramanoam/cli/commands.hpp"

int main(int argc, char** argv) { return ramanoam::cli::run_cli(argc, argv, std::cout, std::cerr); }
