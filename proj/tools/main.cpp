#include "betti/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return betti::run(argc, argv, std::cout, std::cerr);
}
