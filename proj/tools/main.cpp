#include <iostream>

#include "hyperchrom_cli.hpp"

int main(int argc, char** argv) { return hyperchrom::cli::run(argc, argv, std::cout, std::cerr); }
