#include <iostream>

#include "vcyc/commands.hpp"

int main(int argc, char** argv) { return vcyc::cli::run(argc, argv, std::cout, std::cerr); }
