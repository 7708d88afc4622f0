#include "doctest.h"

#include "linrel/generator.hpp"
#include "linrel/io.hpp"
#include "linrel/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

using namespace linrel;

namespace {

TrialConfig small_config() {
  TrialConfig config;
  config.trials = 5;
  config.dims = {{3, 3}};
  config.seed = 2024;
  return config;
}

}  // namespace

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 13);
  CHECK(std::find(names.begin(), names.end(), "arens") != names.end());
  CHECK(std::find(names.begin(), names.end(), "remark2.4") != names.end());
  CHECK(is_suite("thm2.3"));
  CHECK_FALSE(is_suite("thm9.9"));
  CHECK_THROWS_AS(run_suite("thm9.9", small_config()), DimensionError);
}

TEST_CASE("individual suites pass on small configurations") {
  for (const std::string& id : suite_names()) {
    CAPTURE(id);
    const SuiteResult result = run_suite(id, small_config());
    CHECK(result.failures == 0);
    CHECK(result.passes == result.trials);
    CHECK(result.worst_residual <= 1e-8);
    CHECK(result.counterexample.empty());
  }
}

TEST_CASE("config validation") {
  TrialConfig bad = small_config();
  bad.trials = 0;
  CHECK_THROWS_AS(run_suite("arens", bad), DimensionError);
  bad = small_config();
  bad.dims = {};
  CHECK_THROWS_AS(run_suite("arens", bad), DimensionError);
  bad = small_config();
  bad.dims = {{0, 3}};
  CHECK_THROWS_AS(run_suite("arens", bad), DimensionError);
  bad = small_config();
  bad.tol = -1.0;
  CHECK_THROWS_AS(run_suite("arens", bad), DimensionError);
}

TEST_CASE("full run covers every suite and repeats bitwise") {
  TrialConfig config = small_config();
  config.suites = {"all"};
  const VerificationReport a = run_suites(config);
  const VerificationReport b = run_suites(config);
  REQUIRE(a.suites.size() == suite_names().size());
  REQUIRE(b.suites.size() == a.suites.size());
  for (size_t i = 0; i < a.suites.size(); ++i) {
    CHECK(a.suites[i].suite == b.suites[i].suite);
    CHECK(a.suites[i].worst_residual == b.suites[i].worst_residual);
    CHECK(a.suites[i].passes == b.suites[i].passes);
  }
  CHECK(a.total_seconds >= 0.0);
}

TEST_CASE("suite results replay inside a larger run") {
  // The per-trial seed depends only on (seed, suite, trial), so running a
  // suite alone matches its entry in a full run.
  TrialConfig config = small_config();
  config.suites = {"thm2.3", "arens"};
  const VerificationReport full = run_suites(config);
  const SuiteResult alone = run_suite("arens", config);
  const auto it =
      std::find_if(full.suites.begin(), full.suites.end(),
                   [](const SuiteResult& r) { return r.suite == "arens"; });
  REQUIRE(it != full.suites.end());
  CHECK(it->worst_residual == alone.worst_residual);
}

TEST_CASE("replay reruns a stored payload") {
  Rng rng(31);
  GenOptions opts;
  opts.n = 3;
  opts.m = 3;
  const LinearRelation t = gen_relation(rng, opts);

  nlohmann::ordered_json payload;
  payload["check_seed"] = 7;
  payload["relations"] = nlohmann::ordered_json::array();
  payload["relations"].push_back(
      {{"role", "T"},
       {"data", nlohmann::ordered_json::parse(relation_to_json(t))}});
  const double residual = replay_counterexample("arens", payload.dump(), 1e-8);
  CHECK(residual < 1e-8);

  CHECK_THROWS_AS(replay_counterexample("arens", "{}", 1e-8), DimensionError);
  CHECK_THROWS_AS(replay_counterexample("arens", "not json", 1e-8),
                  DimensionError);
  CHECK_THROWS_AS(replay_counterexample("thm9.9", payload.dump(), 1e-8),
                  DimensionError);
}

TEST_CASE("a failing run embeds a counterexample that fails again on replay") {
  // With tolerance zero every membership gate inside the check trips, so
  // each trial fails and the first one is embedded with its full data. The
  // payload must reproduce the failure: the stored relation carries the
  // zero tolerance, so the replayed check hits the same domain error.
  TrialConfig config = small_config();
  config.tol = 0.0;
  config.trials = 3;
  const SuiteResult result = run_suite("arens", config);
  CHECK(result.failures == config.trials);
  REQUIRE(!result.counterexample.empty());

  const auto payload = nlohmann::ordered_json::parse(result.counterexample);
  CHECK(payload.at("suite").get<std::string>() == "arens");
  CHECK(payload.at("relations").size() == 1);
  // The run records the thrown error as a note and an unbounded residual,
  // which serializes as null.
  CHECK(payload.at("residual").is_null());
  CHECK(payload.at("note").get<std::string>().find("domain") !=
        std::string::npos);
  CHECK_THROWS_AS(replay_counterexample("arens", result.counterexample, 0.0),
                  DomainError);
}

TEST_CASE("remark demo matches the closed forms") {
  const auto rows = remark24_demo({4, 16});
  REQUIRE(rows.size() == 2);
  for (const Remark24Row& row : rows) {
    const double order = static_cast<double>(row.order);
    CHECK(std::abs(row.t_norm - order) < 1e-9);
    CHECK(std::abs(row.s1_norm) < 1e-9);
    CHECK(std::abs(row.s2_norm - 1.0) < 1e-9);
    CHECK(std::abs(row.s1_minus_t_norm) < 1e-9);
    CHECK(std::abs(row.s2_minus_t_norm - (order - 1.0)) < 1e-9);
  }
  CHECK_THROWS_AS(remark24_demo({1}), PreconditionError);
}

TEST_CASE("real field runs pass as well") {
  TrialConfig config = small_config();
  config.field = Field::real;
  for (const std::string& id : {"arens", "thm2.4", "lemma2.5/2.6"}) {
    CAPTURE(id);
    const SuiteResult result = run_suite(id, config);
    CHECK(result.failures == 0);
  }
}
