#include <iostream>

#include "qbool/cli.hpp"

int main(int argc, char** argv) { return qbool::cli::run(argc, argv, std::cout, std::cerr); }
