#include <iostream>

#include "sconv/cli.hpp"

int main(int argc, char** argv) {
    return sconv::parse_and_dispatch(argc, argv, std::cout, std::cerr);
}
