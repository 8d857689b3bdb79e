#include <iostream>

#include "qtoric/cli.hpp"

int main(int argc, char** argv) {
    return qtoric::cli::run(argc, argv, std::cout, std::cerr);
}
