#include "specnet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return specnet::run_cli(args, std::cout, std::cerr);
}
