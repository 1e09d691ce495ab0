#include <iostream>

#include <wcqsym/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return wcqsym::run_cli(args, std::cout, std::cerr);
}
