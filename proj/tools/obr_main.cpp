#include <iostream>
#include <string>
#include <vector>

#include "obr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return obr::run_cli(std::move(args), std::cout, std::cerr);
}
