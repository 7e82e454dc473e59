#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return mlein::cli::run(args, std::cout, std::cerr);
}
