#include "adelic/cli_runner.hpp"
#include <iostream>
#include <vector>
#include <string>
int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return adelic::run_cli(args, std::cout, std::cerr);
}
