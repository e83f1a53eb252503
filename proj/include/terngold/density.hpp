#pragma once

#include <cstdint>
#include <string>

#include "terngold/exec.hpp"
#include "terngold/rational.hpp"
#include "terngold/unit_function.hpp"

namespace terngold::dens {

// Margin/slack pair (delta, eta) restricted to the window in which every
// step below is guaranteed to succeed: 0 < delta < 5/32 and 0 < eta <
// (2/5)*delta, all strict and exact.
struct ThresholdParams {
  Rat delta;
  Rat eta;

  // Validates the window; throws std::domain_error naming the violation.
  static ThresholdParams create(const Rat& delta, const Rat& eta);
};

enum class WitnessMode { Brute, Constructive };

enum class WitnessStatus {
  Ok,                 // witness found and re-verified
  PreconditionFails,  // an input-side hypothesis fails; detail names it
  CertificateFail,    // a step the theory guarantees did not go through
};

const char* to_string(WitnessStatus s);

// A unit triple (a, b, c) with a + b + c congruent to the target, together
// with the function values there and the derived quantities each caller
// checks: the pairwise-product margin, the value sum, and the product.
struct WitnessTriple {
  std::int64_t a = -1, b = -1, c = -1;
  Rat fa, fb, fc;
  Rat margin;   // pair_margin(fa, fb, fc)
  Rat sum;      // fa + fb + fc
  Rat product;  // fa * fb * fc
};

struct WitnessOptions {
  Exec exec = Exec::Parallel;
  // Smallest prime factor the constructive recursion will accept.  7 is the
  // default contract; 11 is the stricter comparison variant.
  std::int64_t min_base_prime = 7;
};

struct WitnessReport {
  WitnessStatus status = WitnessStatus::Ok;
  std::string detail;      // names the failing hypothesis / failing step
  WitnessTriple witness;   // meaningful iff status == Ok
  long long scanned = 0;   // candidate pairs examined (all modes, summed)
};

// Positive-margin witness: given f1, f2, f3 on the units of Z_m with
// (m, 30) = 1, mean(f1) > 5/8 + delta, mean(f2), mean(f3) > 5/8 - eta, find
// a unit triple a + b + c = x (mod m) with pair_margin(f1(a), f2(b), f3(c))
// strictly positive.  Brute mode scans all phi(m)^2 pairs and returns the
// maximal-margin triple (ties: lexicographic).  Constructive mode peels the
// largest prime p, averages it out, recurses, and reconstructs the Z_p
// coordinates from decreasing rearrangements, level sets, and the
// prime-field sumset bound.
WitnessReport find_margin_witness(const unitfn::UnitFunction& f1,
                                  const unitfn::UnitFunction& f2,
                                  const unitfn::UnitFunction& f3,
                                  const ThresholdParams& params,
                                  std::int64_t x, WitnessMode mode,
                                  const WitnessOptions& opt = {});

// Support witness over Z_15: under the exact sum hypothesis
// F1*F2 + F2*F3 + F3*F1 > 5*(F1 + F2 + F3) (F_i the value totals), find a
// unit triple summing to v with positive value product and value sum > 3/2.
// Selection: maximal sum, ties lexicographic.
WitnessReport find_support_witness_mod15(const unitfn::UnitFunction& f1,
                                         const unitfn::UnitFunction& f2,
                                         const unitfn::UnitFunction& f3,
                                         std::int64_t v,
                                         Exec exec = Exec::Parallel);

// Support witness for any square-free modulus: same mean gate as
// find_margin_witness, conclusion f1(a)*f2(b)*f3(c) > 0 and value sum > 3/2.
// Brute mode scans directly (even moduli allowed).  Constructive mode
// requires odd m and dispatches on the factorization: coprime to 30 ->
// margin witness (whose positivity already forces both conclusions);
// divisible by 15 -> marginalize the Z_15 coordinate away, find a margin
// witness on the rest, and solve the Z_15 coordinate from the restricted
// functions; divisible by exactly one of 3, 5 -> pull back along reduction
// from lcm(m, 15) and reduce the witness.
WitnessReport find_support_witness(const unitfn::UnitFunction& f1,
                                   const unitfn::UnitFunction& f2,
                                   const unitfn::UnitFunction& f3,
                                   const ThresholdParams& params,
                                   std::int64_t x, WitnessMode mode,
                                   const WitnessOptions& opt = {});

}  // namespace terngold::dens
