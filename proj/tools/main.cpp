#include <iostream>

#include "fano/cli.hpp"

int main(int argc, char** argv) {
    return fano::cli::run(argc, argv, std::cout, std::cerr);
}
