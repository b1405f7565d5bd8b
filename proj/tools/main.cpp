#include <iostream>

#include "curvcert/cli.hpp"

int main(int argc, char** argv)
{
    return curvcert::cli::run(argc, argv, std::cout, std::cerr);
}
