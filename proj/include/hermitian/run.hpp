#pragma once

// Subcommand dispatch shared by the C API and the command-line tool.

#include <optional>
#include <string>
#include <vector>

#include "hermitian/report.hpp"

namespace hq {

inline constexpr const char* kToolName = "hqinv";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  uint32_t p = 2;
  uint32_t h = 1;
  uint32_t m = 0;  // 0: per-check default
  uint32_t k = 1;
  uint64_t seed = 42;
  uint64_t points = 1000;
  uint64_t elements = 100;
  uint32_t word_length = 8;
  uint64_t args = 100;  // PGL(2) arguments per map
  unsigned threads = 1;
  uint64_t max_sylvester_dim_sq = 10000;
  std::vector<std::string> checks;  // verify-symbolic subset
  bool timestamp = true;

  Json to_json() const;
};

// Accepts {"q"} or {"p","h"} plus the remaining RunConfig fields; unknown
// keys and malformed values raise BadParameters.
RunConfig config_from_json(const Json& j);

// q = p^h, or BadParameters.
std::pair<uint32_t, uint32_t> split_prime_power(uint64_t q);

const std::vector<std::string>& subcommands();

// The run document: {tool, version, subcommand, config, rng, seed,
// [timestamp], reports, skipped, pass}. Configuration problems throw Error.
Json run(const std::string& subcommand, const RunConfig& cfg);

}  // namespace hq
