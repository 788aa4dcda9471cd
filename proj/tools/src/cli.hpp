#pragma once

// Command-line front end.  `run` is the whole program minus process setup so
// that tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace singcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.  JSON results go to `out`; errors go to
/// `err` as {"schema", "error": {"code", "message", ...}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Aligned plain-text rendering of a result object.
std::string render_pretty(const nlohmann::ordered_json& j);

}  // namespace singcoh::cli
