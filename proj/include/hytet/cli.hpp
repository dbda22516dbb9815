#pragma once

#include <map>
#include <string>
#include <vector>

namespace hytet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNonexistent = 2;
inline constexpr int kExitInput = 64;
inline constexpr int kExitInternal = 70;

struct CliResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Runs one command. `args` excludes the program name; `env` supplies the
/// HYTET_* variables (the tool passes the process environment). Settings
/// resolve as defaults < env < input document config < flags.
CliResult run(const std::vector<std::string>& args,
              const std::map<std::string, std::string>& env = {});

}  // namespace hytet::cli
