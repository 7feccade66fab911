#include <iostream>

#include "rankforge/cli.hpp"

int main(int argc, char** argv)
{
    return rankforge::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
