#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terngold/exec.hpp"
#include "terngold/rational.hpp"

namespace terngold::seq {

// Three nonincreasing rational sequences over [0, 1] of one common even
// length n.  The central claim about such triples: if
//
//   a_i b_j + b_j c_k + c_k a_i <= (5/8)(a_i + b_j + c_k)
//
// holds for every index triple with i + j + k >= n, then the same bound holds
// for the three averages A, B, C:
//
//   AB + BC + CA <= (5/8)(A + B + C).
//
// The averaged bound is claimed for n >= 6; smaller even lengths are accepted
// as instances (the search tooling probes them) but are outside the claim.
struct TripleSequences {
  int n = 0;
  std::vector<Rat> a, b, c;

  // Validates: even n >= 2, all three lengths equal n, entries in [0, 1],
  // each sequence nonincreasing.  Throws std::invalid_argument otherwise.
  static TripleSequences create(std::vector<Rat> a, std::vector<Rat> b,
                                std::vector<Rat> c);

  bool in_claimed_range() const { return n >= 6; }
};

// The same data after the affine change of variable x = (16/5) a - 1, which
// maps [0, 1] onto [-1, 11/5] and turns the pointwise bound into
//
//   x_i y_j + y_j z_k + z_k x_i <= 3.
//
// m = n/2 splits each sequence into a leading and a trailing half.
struct TransformedSequences {
  int n = 0;
  int m = 0;
  std::vector<Rat> x, y, z;
};

TransformedSequences transform_to_xyz(const TripleSequences& s);
TripleSequences inverse_transform(const TransformedSequences& t);

struct Violation {
  int i = 0, j = 0, k = 0;
  Rat lhs, rhs;  // lhs > rhs at the reported triple
};

struct HypothesisReport {
  bool holds = true;
  std::optional<Violation> first_violation;  // lexicographically smallest
  std::int64_t scanned = 0;                  // triples examined
};

// Exact: GMP rationals end to end.  Int128: common-denominator integer
// kernel (throws std::invalid_argument if the instance does not fit).
// Auto picks Int128 when it fits and falls back to Exact.
enum class ScanBackend { Auto, Exact, Int128 };

struct ScanOptions {
  Exec exec = Exec::Parallel;
  ScanBackend backend = ScanBackend::Auto;
};

// Scans every triple with i + j + k >= n and checks the pointwise bound.
HypothesisReport check_triple_hypothesis(const TripleSequences& s,
                                         const ScanOptions& opt = {});

// Same scan in transformed coordinates against the constant bound 3.
HypothesisReport check_transformed_hypothesis(const TransformedSequences& t,
                                              const ScanOptions& opt = {});

struct AverageReport {
  bool holds = true;
  Rat margin;  // (5/8)(A+B+C) - (AB+BC+CA); nonnegative iff the bound holds
  Rat avg_a, avg_b, avg_c;
};

AverageReport check_average_bound(const TripleSequences& s);

enum class InstanceStatus {
  HypothesisFails,  // pointwise bound fails somewhere: claim says nothing
  Confirmed,        // pointwise bound holds and the averaged bound holds
  Counterexample,   // pointwise bound holds yet the averaged bound fails
};

const char* to_string(InstanceStatus s);

struct InstanceVerdict {
  InstanceStatus status = InstanceStatus::Confirmed;
  HypothesisReport hypothesis;
  AverageReport average;
  bool in_claimed_range = false;
};

InstanceVerdict classify_instance(const TripleSequences& s,
                                  const ScanOptions& opt = {});

// --- half-block quantities ---------------------------------------------------
//
// Writing x0 for the sum of the leading half of x and x1 for the trailing
// half (likewise y, z), the averaged bound in transformed coordinates is
// controlled by corner values x_0 = x[0], x_m = x[m] and the derived terms
// below.  Field names follow that split: e.g. delta0 couples the three
// leading entries, delta_m the entries at position m.
struct BlockQuantities {
  Rat x0, x1, y0, y1, z0, z1;  // half-block sums
  Rat delta0;    // x[0]y[0] + y[0]z[0] + z[0]x[0]
  Rat delta_m;   // x[m]y[m] + y[m]z[m] + z[m]x[m]
  Rat delta_m0;  // all six cross products between position-m and position-0
                 // values: x[m](y[0]+z[0]) + y[m](z[0]+x[0]) + z[m](x[0]+y[0])
  Rat r, s, t;   // x[0]+x[m], y[0]+y[m], z[0]+z[m]
  Rat u;         // rs + st + tr
  Rat e, f, g;   // x[0]+y[0]-5(x[m]+y[m]) and the two rotations
};

BlockQuantities compute_block_quantities(const TransformedSequences& t);

// One inequality of the averaging argument.  `applicable` reflects the gate
// condition; `holds` is only meaningful when applicable.  The relation
// checked is always lhs <= rhs.
struct LedgerEntry {
  std::string name;
  bool applicable = false;
  bool holds = true;
  Rat lhs, rhs;
};

struct CertificateReport {
  bool hypothesis_ok = false;  // pointwise bound verified (or assumed)
  std::vector<LedgerEntry> entries;
  bool all_applicable_hold = true;
};

// Evaluates the chain of case-gated inequalities behind the averaged bound on
// a transformed instance.  When the pointwise hypothesis fails, every entry
// is reported inapplicable.  assume_hypothesis skips the re-scan (campaign
// callers that already checked it).
CertificateReport certificate_ledger(const TransformedSequences& t,
                                     bool assume_hypothesis = false,
                                     const ScanOptions& opt = {});

// Largest factor u in (0, 1] such that (ua, ub, uc) satisfies the pointwise
// bound everywhere.  Exact; equals 1 when the instance already satisfies it.
// Scaling by the returned value lands exactly on the feasible boundary
// whenever the unscaled instance violates it.
Rat feasibility_scale(const TripleSequences& s);

TripleSequences scale_instance(const TripleSequences& s, const Rat& u);

}  // namespace terngold::seq
