#include <iostream>
#include <string>
#include <vector>

#include "fibfq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fibfq::cli::run(std::move(args), std::cout, std::cerr);
}
