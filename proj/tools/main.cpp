#include <iostream>

#include "digitroot/cli.hpp"

int main(int argc, char** argv) {
    return digitroot::cli::run(argc, argv, std::cout, std::cerr);
}
