#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "regcensus/census.hpp"

namespace regcensus {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitCapExceeded = 3,
};

struct RunConfig {
    std::string command;                // census | orbits | oracle | verify
    int p = 0;
    std::optional<int> k;               // default: sweep p <= k <= 2(p-1)
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::uint64_t closure_cap = kDefaultClosureCap;
    std::string emit = "json";          // json | csv
    std::string out_path;               // empty: stdout
};

// Parses argv; cap flags fall back to REGCENSUS_ENUM_CAP / REGCENSUS_CLOSURE_CAP.
// On parse failure writes a message to err and returns nullopt with exit_code
// set (kExitUsage, or kExitOk for --help).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& err,
                                    int& exit_code);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int main_entry(int argc, const char* const* argv);

}  // namespace regcensus
