#include <cliquepoly/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return cliquepoly::cli::run_command_line(argc, argv, std::cout, std::cerr);
}
