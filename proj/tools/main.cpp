#include <iostream>

#include "msfuzzy_cli.hpp"

int main(int argc, char** argv) { return msfuzzy::cli::run(argc, argv, std::cout, std::cerr); }
