#include <iostream>

#include "hodgkin/cli.hpp"

int main(int argc, char** argv)
{
    return hodgkin::cli::run(argc, argv, std::cout, std::cerr);
}
