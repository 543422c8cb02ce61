#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pade/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pade::cli::run(args, std::cout, std::cerr, std::getenv("PADE_MODE"));
}
