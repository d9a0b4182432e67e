#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "sexa/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sexa::cli::dispatch(args, {&std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0});
}
