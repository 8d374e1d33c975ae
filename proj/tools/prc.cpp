#include <iostream>

#include "prc/cli.hpp"

int main(int argc, char** argv) { return prc::CliMain(argc, argv, std::cout, std::cerr); }
