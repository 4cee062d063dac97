#include <iostream>
#include <string>
#include <vector>

#include "frobkern/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return frobkern::cli::dispatch(args, std::cout, std::cerr);
}
