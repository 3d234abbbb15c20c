#include <pincert/cli.hpp>

#include <cstdio>

int main(int argc, char** argv) {
    auto result = pincert::cli::run(argc, argv);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
