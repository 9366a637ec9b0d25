#include <iostream>

#include "pagebook/cli.hpp"

int main(int argc, char** argv) { return pagebook::run_cli(argc, argv, std::cout, std::cerr); }
