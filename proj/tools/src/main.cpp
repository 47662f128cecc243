#include "weylkit_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return weylkit::cli::main_entry(argc, argv, std::cout, std::cerr); }
