#include <iostream>
#include <string>
#include <vector>

#include "fsind/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fsind::cli::run(args, std::cout, std::cerr);
}
