#include <iostream>
#include <string>
#include <vector>

#include "snp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return snp::run_cli(args, std::cout, std::cerr);
}
