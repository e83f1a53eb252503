#pragma once

#include <cstdint>

#include "terngold/exec.hpp"
#include "terngold/sequences.hpp"

namespace terngold::seq {

struct SearchConfig {
  int n = 6;
  std::uint64_t steps = 1000;  // per restart
  std::uint64_t seed = 0;
  Rat step_scale = Rat(1, 8);  // proposal amplitude, in (0, 1]
  int restarts = 1;
  Exec exec = Exec::Parallel;
};

struct SearchResult {
  TripleSequences best;  // satisfies the pointwise bound exactly
  // Search objective (AB+BC+CA) - (5/8)(A+B+C) of `best`, exact.  This is
  // the negation of AverageReport::margin; positive means the averaged bound
  // failed on a pointwise-feasible instance.
  Rat best_margin;
  bool counterexample = false;  // best_margin > 0 under exact re-verification
  std::uint64_t steps_run = 0;
  std::uint64_t accepted = 0;
  int best_restart = 0;
};

// Seeded annealing-style local search for averaged-bound violations: perturb
// one coordinate, project back onto the nonincreasing [0,1] cone, reject
// proposals that break the pointwise bound (checked in doubles), and finally
// re-verify the champion exactly after scaling it onto the feasibility
// boundary.  Restart r uses seed + r; results merge deterministically.
SearchResult search_counterexample(const SearchConfig& cfg);

// Campaign generator: a seeded random monotone instance with entry
// denominators <= max_den, scaled so the pointwise bound holds exactly.
// Half of the draws land exactly on the feasibility boundary (where the
// certificate inequalities saturate); the rest stay interior via a dyadic
// down-rounded scale.  Several shape families (uniform, near-5/8 constant,
// step, tied values) are mixed by seed.
TripleSequences random_feasible_instance(int n, std::uint64_t seed,
                                         int max_den = 128);

}  // namespace terngold::seq
