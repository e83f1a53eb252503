#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "terngold/density.hpp"
#include "terngold/exec.hpp"
#include "terngold/rational.hpp"
#include "terngold/sieve.hpp"
#include "terngold/subset_spec.hpp"
#include "terngold/unit_function.hpp"

namespace terngold::wtrick {

// One logarithmic weight-mass threshold comparison.  The weights are exact
// dyadic freezes of double computations, so the comparison itself is exact;
// `marginal` flags totals so close to the threshold that the floating log
// sums could have decided it either way.
struct MeanCondition {
  Rat total;       // sum of the weight over the units
  Rat threshold;   // required strict lower bound
  bool holds = false;
  bool marginal = false;
  double error_bound = 0;  // estimated absolute error in total
};

struct WTrickProfile {
  std::int64_t z = 0;
  std::int64_t w = 0;  // product of the primes below z (even, square-free)
  std::int64_t n = 0;
  Rat delta;           // window (0, 5/12)
  Rat eta;             // window (0, delta/50)
  std::array<primes::PrimeSubsetSpec, 3> specs;
  std::array<unitfn::UnitFunction, 3> weights;  // on the units of Z_W
  std::array<MeanCondition, 3> means;
  bool all_means_hold = false;
  // The derived margin parameters for the downstream witness search:
  // 3*delta/8 and 5*eta/4 + delta/8.  The window above makes them land
  // exactly inside the (5/32, 2/5) window the search requires.
  Rat effective_delta;
  Rat effective_eta;
};

struct WTrickOptions {
  std::int64_t w_bound = 1'000'000;   // refuse larger W up front
  std::int64_t brute_bound = 10'000;  // direct unit-scan cap on W
  Exec exec = Exec::Parallel;
};

// Congruence-class weights: for each unit b of Z_W,
//   f_i(b) = clamp( (3*phi(W)/(2n)) * sum_{x in P_i, x = b (W), 3x < 2n} log x
//            - delta/8 , 0, 1),
// with the three mass thresholds (5/8 + 3*delta/8)*phi(W) for f_1 and
// (5/8 - (5*eta/4 + delta/8))*phi(W) for f_2, f_3.
WTrickProfile w_trick_weights(std::int64_t z, std::int64_t n,
                              const std::array<primes::PrimeSubsetSpec, 3>& specs,
                              const Rat& delta, const Rat& eta,
                              const primes::PrimeTable& table,
                              const WTrickOptions& opt = {});

// Both readings of the witness step over the even modulus W.
struct CongruenceWitness {
  // direct exhaustive scan over the units of Z_W (valid for any square-free
  // W at this scale; run when W <= brute_bound)
  bool direct_ran = false;
  dens::WitnessReport direct;
  // constructive path on the odd part W/2 with the mod-2 coordinate pinned
  // to 1 (the only unit of Z_2)
  bool odd_part_ran = false;
  std::int64_t odd_modulus = 0;
  dens::WitnessReport odd_part;                    // triple lives in Z_{W/2}
  std::array<std::int64_t, 3> joined{-1, -1, -1};  // odd-part triple in Z_W
  // verdict: the direct reading when available, else the odd-part one
  dens::WitnessStatus status = dens::WitnessStatus::Ok;
  std::string detail;
};

// Requires profile.all_means_hold; the target is n mod W.
CongruenceWitness find_congruence_witness(const WTrickProfile& profile,
                                          const WTrickOptions& opt = {});

}  // namespace terngold::wtrick
