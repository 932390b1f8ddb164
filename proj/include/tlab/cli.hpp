#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tlab {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kViolation = 3;
inline constexpr int kConditionNotMet = 4;
}  // namespace exit_code

/// Parsed command line. Seed precedence: --seed, then TOEPLITZ_LAB_SEED, then
/// the built-in default.
struct RunConfig {
    std::string command;
    std::string family = "starlike";
    int order = 16;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    int grid = 200;
    std::optional<double> tol;
    std::optional<double> oracle_tol;
    std::string out;
    std::size_t n = 3;
    std::string norm = "sup";
    std::vector<double> radii{0.3, 0.6, 0.9};
    std::string theorem = "both";
    std::vector<std::string> lambdas{"0", "0.5", "1", "2"};
    std::string sweep;
    int max_factors = 3;
    bool homogeneous_t31 = false;
};

/// Runs one command; writes JSON/CSV to `out` (or --out) and diagnostics to
/// `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tlab
