#include "semifree/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return semifree::run_cli(argc, argv, std::cout, std::cerr); }
