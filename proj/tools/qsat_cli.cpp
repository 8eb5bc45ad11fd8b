// Process wrapper around run_cli.

#include <iostream>
#include <string>
#include <vector>

#include "qsat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qsat::run_cli(args, std::cout, std::cerr);
}
