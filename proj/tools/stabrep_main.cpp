#include <iostream>
#include <string>
#include <vector>

#include "stabrep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return stabrep::cli::run(args, std::cout, std::cerr);
}
