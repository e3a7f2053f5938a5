#include <iostream>

#include "lamarle/cli.hpp"

int main(int argc, char** argv) {
    return lamarle::cli::main_entry(argc, argv, std::cout, std::cerr);
}
