#include "fieldsym/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fieldsym::cli::run(argc, argv, std::cout, std::cerr); }
