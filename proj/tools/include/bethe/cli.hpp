#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bethe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Process environment the CLI reads; injectable for tests.
struct Environment {
    std::optional<std::string> precision_bits;  ///< BETHE_PRECISION_BITS

    static Environment from_process();
};

/// Runs one invocation. `args` excludes the program name. Data goes to `out`
/// (or to --output), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace bethe::cli
