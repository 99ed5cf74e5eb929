#include <iostream>

#include "algeq/cli.hpp"

int main(int argc, char** argv) { return algeq::run(argc, argv, std::cout, std::cerr); }
