#include <iostream>

#include "ehall/cli.hpp"

int main(int argc, char** argv)
{
    return ehall::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
