#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circe/wick.hpp"

namespace circe::cli {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json extra;  // Monte Carlo comparisons put their report here
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  int batches = 20;
  int N = 0;  // 0 = suite default
  int M = 0;
  double sigma_tol = 4.0;
  EngineOptions engine;
};

/// cancellations catalan jpoly termcount typo traces jm selection cue
/// mc-coe mc-cue determinism all
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace circe::cli
