#include <iostream>

#include "lw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lw::cli::run(args, std::cout, std::cerr);
}
