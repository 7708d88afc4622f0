#pragma once

#include "linrel/relation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace linrel {

// Configuration for a verification run. Each suite draws `trials`
// independent instances per (n, m) entry of `dims`, with per-trial seeds
// derived from (seed, suite id, trial index), so single suites replay
// identically inside a full run.
struct TrialConfig {
  std::uint64_t seed = 42;
  int trials = 200;
  std::vector<std::pair<int, int>> dims = {{4, 4}};
  Field field = Field::complex;
  double tol = 1e-8;
  // Suite ids to run; empty or {"all"} means every registered suite.
  std::vector<std::string> suites;
};

struct SuiteResult {
  std::string suite;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  double worst_residual = 0.0;
  // JSON payload reproducing the first failing trial: the relations
  // involved, the scalars, the check seed and the witness data. Empty when
  // every trial passed.
  std::string counterexample;
};

struct VerificationReport {
  TrialConfig config;
  std::vector<SuiteResult> suites;
  double total_seconds = 0.0;
};

// Registered suite ids, in report order.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& id);

// Runs one suite under the configuration (the config's own suite list is
// ignored). Unknown ids raise DimensionError.
SuiteResult run_suite(const std::string& id, const TrialConfig& config);

// Runs the configured suites and stamps the total wall time.
VerificationReport run_suites(const TrialConfig& config);

// Re-executes a stored counterexample payload and returns the residual the
// check reproduces now.
double replay_counterexample(const std::string& suite_id,
                             const std::string& payload, double tol);

// One truncation order of the built-in unbounded-perturbation demo: the
// diagonal operator T_N x = (1 x_1, ..., N x_N) against the everywhere
// relation S1 = C^N x C^N and the identity-plus-line relation
// S2 x = {x} + span(e_1).
struct Remark24Row {
  int order = 0;
  double t_norm = 0.0;
  double s1_norm = 0.0;
  double s2_norm = 0.0;
  double s1_minus_t_norm = 0.0;
  double s2_minus_t_norm = 0.0;
};

// Rows for the requested truncation orders (each at least 2).
std::vector<Remark24Row> remark24_demo(const std::vector<int>& orders);

}  // namespace linrel
