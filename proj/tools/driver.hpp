#ifndef FIBERFIELD_DRIVER_HPP
#define FIBERFIELD_DRIVER_HPP

#include <json.hpp>
#include <string>

#include "fiberfield/ring.hpp"

namespace fiberfield::cli {

using nlohmann::json;

// Invalid or unparsable configuration; mapped to exit code 2.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Exit-code contract: 0 success (including negative mathematical verdicts),
// 2 config error, 3 resource budget, 4 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

json run_der_solve(const json& cfg, long budget);
json run_cohomology(const json& cfg, long budget);
json run_example(const std::string& name, const json& cfg, long budget);

// Assemble the versioned report envelope around a result payload.
json wrap_report(const std::string& subcommand, const json& config_echo, json results,
                 double timing_ms);

}  // namespace fiberfield::cli

#endif
