#include <iostream>

#include "sim/cli.hpp"

int main(int argc, char** argv) {
    try {
        return sim::run_cli(argc, argv, std::cin, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 1;
    }
}
