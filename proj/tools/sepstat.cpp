#include <iostream>
#include <string>
#include <vector>

#include "sepstat/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sepstat::cli::run(args, std::cout, std::cerr);
}
