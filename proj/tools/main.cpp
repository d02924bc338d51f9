#include "cp2b/cli_app.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cp2b::run_cli(std::move(args), std::cout, std::cerr);
}
