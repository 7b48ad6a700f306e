#include "atlas/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return atlas::cli::run(argc, argv, std::cout, std::cerr);
}
