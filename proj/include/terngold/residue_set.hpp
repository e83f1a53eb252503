#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "terngold/exec.hpp"
#include "terngold/modulus.hpp"
#include "terngold/rational.hpp"

namespace terngold::mod {

// A subset of Z_m as a packed bit vector with a cached cardinality.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(std::int64_t m);  // empty set
  static ResidueSet from_members(std::int64_t m,
                                 std::span<const std::int64_t> members);
  static ResidueSet full(std::int64_t m);

  std::int64_t modulus() const { return m_; }
  std::int64_t cardinality() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool test(std::int64_t r) const;
  void insert(std::int64_t r);
  void erase(std::int64_t r);
  std::vector<std::int64_t> members() const;
  bool is_subset_of(const ResidueSet& other) const;
  bool operator==(const ResidueSet& other) const {
    return m_ == other.m_ && words_ == other.words_;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::int64_t m_ = 0;
  std::int64_t count_ = 0;
  std::vector<std::uint64_t> words_;  // bits >= m_ always zero
};

// {x in Z_m : gcd(x, m) = 1}; for m = 1 this is {0} (the unit of the trivial
// ring), the degenerate base of the CRT recursion.
ResidueSet units(std::int64_t m);

ResidueSet complement(const ResidueSet& s);
ResidueSet translate(const ResidueSet& s, std::int64_t t);

// {a + b mod m}: rotate-and-OR boolean convolution over packed words.
ResidueSet sumset_pair(const ResidueSet& a, const ResidueSet& b,
                       Exec exec = Exec::Parallel);
ResidueSet sumset3(const ResidueSet& a, const ResidueSet& b,
                   const ResidueSet& c, Exec exec = Exec::Parallel);
// Cubic member loop; the reference oracle for the convolution form.
ResidueSet sumset3_brute(const ResidueSet& a, const ResidueSet& b,
                         const ResidueSet& c);

// Re-indexing along Z_m ≅ Z_{m1} x Z_{m2}.
struct CrtGrid {
  CrtCoordinates crt;
  std::vector<std::uint8_t> cells;  // m1 * m2, row index u, column v
  bool at(std::int64_t u, std::int64_t v) const {
    return cells[u * crt.m2 + v] != 0;
  }
};

CrtGrid crt_split_set(const ResidueSet& s, std::int64_t m1, std::int64_t m2);
ResidueSet crt_join_set(const CrtGrid& grid);

struct CdReport {
  std::int64_t bound = 0;   // min(|A|+|B|+|C|-2, p)
  std::int64_t actual = 0;  // |A+B+C|
  bool holds = false;
};

// The prime-field three-set sumset lower bound.  Refuses composite moduli:
// the statement is only claimed for prime p.
CdReport cauchy_davenport_check(std::int64_t p, const ResidueSet& a,
                                const ResidueSet& b, const ResidueSet& c);

// --- unit-subset covering ----------------------------------------------------
//
// The covering claim: subsets A1, A2, A3 of the units of a square-free odd m
// with |A1| > (5/8)φ(m) and |A2|, |A3| >= (5/8)φ(m) satisfy A1+A2+A3 = Z_m.
// Cardinality thresholds are compared as integers (8|A| vs 5φ), never floats.

enum class CoverMode { Single, Exhaustive, Random, Adversarial };

struct CoverConfig {
  CoverMode mode = CoverMode::Single;
  std::uint64_t seed = 0;
  std::int64_t trials = 1000;  // random mode
  std::int64_t budget = 1000;  // adversarial mode: swap proposals
  bool diagnostic = false;     // single mode: compute coverage even when the
                               // cardinality preconditions fail
  Exec exec = Exec::Parallel;
};

struct CoverFailure {
  ResidueSet a1, a2, a3;
  std::vector<std::int64_t> missing;
};

struct CoverReport {
  bool precondition_ok = true;
  std::string precondition_detail;  // names the failing cardinality
  std::int64_t checked = 0;         // triples examined
  std::int64_t failures = 0;
  bool all_cover = true;
  std::optional<CoverFailure> witness;    // first failure / adversarial worst
  std::int64_t worst_cover_size = -1;     // adversarial mode
};

// sets must be provided exactly in Single mode and are ignored otherwise.
CoverReport verify_unit_cover(const Modulus& modulus,
                              const std::optional<std::array<ResidueSet, 3>>& sets,
                              const CoverConfig& cfg);

// The sharp mod-15 construction: S = {1,4,7,11,13} of density exactly 5/8
// among the units, whose triple sumset misses the class 2.
struct SharpnessMod15 {
  ResidueSet s;
  ResidueSet missing;  // Z_15 \ (S+S+S)
  Rat density;         // |S| / φ(15)
};

SharpnessMod15 mod15_counterexample(Exec exec = Exec::Parallel);

}  // namespace terngold::mod
