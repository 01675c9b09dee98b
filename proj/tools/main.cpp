#include <iostream>

#include "helmholtz2d/cli.hpp"

int main(int argc, char** argv) {
    return helmholtz2d::cli::run(argc, argv, std::cout, std::cerr);
}
