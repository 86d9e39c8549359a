#include "dyadic/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = dyadic::cli::run(args);
    std::cout << result.output;
    std::cerr << result.error;
    return result.exit_code;
}
