#include "hmfcert/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hmfcert::cli::run(argc, argv, std::cout, std::cerr);
}
