#include <iostream>

#include "skeintail/cli.hpp"

int main(int argc, char** argv) { return skein::cli::run(argc, argv, std::cout, std::cerr); }
