#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hytet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::map<std::string, std::string> env;
    for (const char* name : {"HYTET_TOL", "HYTET_MC_SAMPLES", "HYTET_SEED"})
        if (const char* v = std::getenv(name)) env[name] = v;
    const hytet::cli::CliResult r = hytet::cli::run(args, env);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
