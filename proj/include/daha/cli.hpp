#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "daha/coeff.hpp"
#include "daha/io.hpp"

namespace daha::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kInvalidConfig = 2, kResourceCap = 3 };

struct RunConfig {
  std::string type = "A1";
  std::optional<std::string> cartan;  // JSON matrix; overrides type
  std::size_t window_L0 = 4;
  std::size_t window_margin = 3;
  EqualityMode mode = EqualityMode::exact();
  std::uint64_t seed = 1;
  std::size_t maxlen = 3;
  std::size_t samples = 20;
  std::optional<std::string> character;  // JSON character for repo weights
  std::string tau = "2";
  std::string zeta = "3";
  int bound = 50;
  // Operands for weyl len|bruhat|inv and daha mul, as JSON.
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
};

struct Outcome {
  int exit_code = kPass;
  io::json report;
};

/// "exact" or "modp:p:k".
EqualityMode parse_mode(const std::string& s);
/// "L0/m".
std::pair<std::size_t, std::size_t> parse_window(const std::string& s);

const std::vector<std::string>& commands();

/// Report for a configuration rejected before run() (exit 2).
Outcome invalid_config(const std::string& command, const RunConfig& config, const std::string& message);

/// Runs "roots", "weyl ball", "daha verify-relations", ... and never throws:
/// configuration errors map to exit 2 and resource caps to exit 3.
Outcome run(const std::string& command, const RunConfig& config);

}  // namespace daha::cli
