#include <iostream>

#include <chevlab/cli.hpp>

int main(int argc, char** argv)
{
    return chevlab::run_cli(argc, argv, std::cout, std::cerr);
}
