#include "ckgeom_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ckgeom::cli::cli_main(argc, argv, std::cout, std::cerr);
}
