#include <iostream>

#include "mtl/cli.hpp"

int main(int argc, char** argv) { return mtl::cli::dispatch(argc, argv, std::cout, std::cerr); }
