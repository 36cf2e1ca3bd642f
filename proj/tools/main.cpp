#include "qint/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return qint::run_command(argc, argv, std::cout, std::cerr);
}
