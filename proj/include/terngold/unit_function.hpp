#pragma once

#include <cstdint>
#include <vector>

#include "terngold/modulus.hpp"
#include "terngold/rational.hpp"
#include "terngold/residue_set.hpp"

namespace terngold::unitfn {

// A rational-valued function on the unit group of Z_m with values in [0, 1].
// The value total is maintained eagerly so the mean is O(1) and exact.
class UnitFunction {
 public:
  UnitFunction() = default;
  explicit UnitFunction(mod::Modulus modulus, const Rat& fill = Rat(0));

  static UnitFunction constant(const mod::Modulus& modulus, const Rat& value);
  // 1 on support (which must consist of units), 0 elsewhere.
  static UnitFunction indicator(const mod::Modulus& modulus,
                                const mod::ResidueSet& support);

  const mod::Modulus& modulus() const { return mod_; }
  std::int64_t m() const { return mod_.m; }
  std::int64_t size() const { return static_cast<std::int64_t>(units_.size()); }
  const std::vector<std::int64_t>& unit_list() const { return units_; }

  bool is_unit(std::int64_t r) const;
  // Position of r in the ascending unit list; throws for non-units.
  std::int64_t index_of(std::int64_t r) const;

  const Rat& value(std::int64_t unit) const;
  const Rat& value_at(std::int64_t index) const { return values_[index]; }
  // Throws std::domain_error when v is outside [0, 1].
  void set_value(std::int64_t unit, const Rat& v);

  const Rat& total() const { return total_; }
  Rat mean() const;

 private:
  mod::Modulus mod_;
  std::vector<std::int64_t> units_;   // ascending
  std::vector<std::int64_t> index_;   // size m; -1 for non-units
  std::vector<Rat> values_;           // parallel to units_
  Rat total_ = 0;
};

// xy + yz + zx - (5/8)(x + y + z), the pairwise-product margin.  On the
// region where all pairwise sums are at least 5/8 it is nondecreasing in
// each coordinate: bumping x by e changes it by e*(y + z - 5/8).
Rat pair_margin(const Rat& x, const Rat& y, const Rat& z);

// Values sorted nonincreasing; ties broken by ascending unit label so the
// order (and everything derived from it) is deterministic.
struct RearrangedValues {
  std::vector<Rat> values;          // nonincreasing
  std::vector<std::int64_t> units;  // unit carrying each sorted value
};
RearrangedValues decreasing_rearrangement(const UnitFunction& f);

// {x unit : f(x) >= threshold}.
mod::ResidueSet level_set(const UnitFunction& f, const Rat& threshold);

// Average out the Z_d coordinate: for m = m'*d with gcd(m', d) = 1 returns g
// on the units of Z_{m'} with g(x) = (1/phi(d)) * sum over units y of Z_d of
// f at the residue congruent to (x mod m', y mod d).  Preserves the mean.
UnitFunction marginalize(const UnitFunction& f, std::int64_t d);

// Freeze the Z_{m/d} coordinate at the unit a: returns g on the units of
// Z_d with g(y) = f at the residue congruent to (a mod m/d, y mod d).
UnitFunction fiber(const UnitFunction& f, std::int64_t d, std::int64_t a);

// Pull back along reduction mod m: for m | M returns g on the units of Z_M
// with g(x) = f(x mod m).  Preserves the mean (the reduction map on units
// is exactly phi(M)/phi(m)-to-one).
UnitFunction lift(const UnitFunction& f, const mod::Modulus& target);

}  // namespace terngold::unitfn
