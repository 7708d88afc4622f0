#pragma once

#include "linrel/norms.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linrel {

// Controls for the heuristic sphere maximization behind the feasibility
// checks. The objective |S(x)| - a - b |T(x)| is a difference of norms, so
// the maximum over unit x is found by dense sampling plus projected
// gradient ascent from the best starts. Deterministic for a fixed seed.
struct SphereMaxOptions {
  int samples = 2000;
  int starts = 20;
  int iterations = 150;
  std::uint64_t seed = 0x5eedb07dULL;
  double tol = 1e-8;
};

struct TBoundFeasibility {
  bool feasible = false;
  double a = 0.0;
  double b = 0.0;
  // max over unit x in D(T) of |S(x)| - a - b |T(x)|; feasible when it is
  // at most the tolerance. Negative infinity-like sentinel when D(T) = {0}.
  double max_violation = 0.0;
  // Unit vector attaining the maximum; empty when D(T) = {0}.
  Vector witness;
};

// Does |S(x)| <= a |x| + b |T(x)| hold on D(T)? Requires D(T) inside D(S)
// and nonnegative (a, b).
TBoundFeasibility t_bound_feasible(const LinearRelation& t,
                                   const LinearRelation& s, double a, double b,
                                   const SphereMaxOptions& opts = {});

struct RelBoundReport {
  // Sampled trade-off curve: for each b in b_grid, the smallest a (clamped
  // at zero) observed to dominate |S(x)| - b |T(x)| over the candidate pool.
  std::vector<double> b_grid;
  std::vector<double> min_a_given_b;
  // Worst-case unit x behind each curve point.
  std::vector<Vector> witnesses;
  // Feasibility verdicts for the recorded (min_a_given_b[i], b_grid[i]) pairs.
  std::vector<bool> feasible;
  // Smallest b on the grid with a finite min_a: in finite dimension every
  // bounded S is T-bounded with bound 0, so this lands on the first entry.
  double t_bound_estimate = 0.0;
  // Certified bound: a = |S| works for every b, since |S(x)| <= |S| |x|.
  double certified_a_upper = 0.0;
  bool trivial_domain = false;
};

RelBoundReport rel_bound_report(const LinearRelation& t,
                                const LinearRelation& s,
                                const SphereMaxOptions& opts = {});

struct SumInequalityReport {
  double a = 0.0;
  double b = 0.0;
  // Worst sampled slack of each inequality; nonpositive values mean the
  // inequality held with room to spare.
  double worst_hypothesis = 0.0;  // |S(x)| - a |x| - b |T(x)|
  double worst_sum_upper = 0.0;   // |(T+S)(x)| - a |x| - (1+b) |T(x)|
  double worst_t_recovery = 0.0;  // |T(x)| - (a |x| + |(T+S)(x)|) / (1-b)
  // Residual of (T+S)(0) = T(0) against both computations.
  double mulpart_residual = 0.0;
  int samples = 0;
};

// Checks the perturbation inequalities for T + S under |S(x)| <= a|x| + b|T(x)|
// with b < 1. When no pair is supplied, b = 1/2 and a is certified as the
// norm of S restricted to D(T). Requires D(T) inside D(S) and S(0) inside T(0).
SumInequalityReport verify_sum_inequalities(
    const LinearRelation& t, const LinearRelation& s,
    std::optional<std::pair<double, double>> ab = std::nullopt,
    int samples = 200, std::uint64_t seed = 0x5eedb07dULL);

}  // namespace linrel
