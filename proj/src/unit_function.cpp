#include "terngold/unit_function.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace terngold::unitfn {

namespace {

bool in_unit_interval(const Rat& v) { return v >= 0 && v <= 1; }

}  // namespace

UnitFunction::UnitFunction(mod::Modulus modulus, const Rat& fill)
    : mod_(std::move(modulus)) {
  if (!in_unit_interval(fill)) {
    throw std::domain_error("unit-function value outside [0, 1]: " +
                            rational_to_string(fill));
  }
  units_ = mod::units(mod_.m).members();
  index_.assign(static_cast<std::size_t>(mod_.m), -1);
  for (std::size_t i = 0; i < units_.size(); ++i) {
    index_[static_cast<std::size_t>(units_[i])] = static_cast<std::int64_t>(i);
  }
  values_.assign(units_.size(), fill);
  total_ = fill * static_cast<long>(units_.size());
}

UnitFunction UnitFunction::constant(const mod::Modulus& modulus,
                                    const Rat& value) {
  return UnitFunction(modulus, value);
}

UnitFunction UnitFunction::indicator(const mod::Modulus& modulus,
                                     const mod::ResidueSet& support) {
  if (support.modulus() != modulus.m) {
    throw std::invalid_argument("indicator support has mismatched modulus");
  }
  UnitFunction f(modulus, Rat(0));
  for (std::int64_t r : support.members()) {
    f.set_value(r, Rat(1));  // throws via index_of when r is not a unit
  }
  return f;
}

bool UnitFunction::is_unit(std::int64_t r) const {
  return r >= 0 && r < mod_.m && index_[static_cast<std::size_t>(r)] >= 0;
}

std::int64_t UnitFunction::index_of(std::int64_t r) const {
  if (r < 0 || r >= mod_.m || index_[static_cast<std::size_t>(r)] < 0) {
    throw std::domain_error(std::to_string(r) + " is not a unit modulo " +
                            std::to_string(mod_.m));
  }
  return index_[static_cast<std::size_t>(r)];
}

const Rat& UnitFunction::value(std::int64_t unit) const {
  return values_[static_cast<std::size_t>(index_of(unit))];
}

void UnitFunction::set_value(std::int64_t unit, const Rat& v) {
  if (!in_unit_interval(v)) {
    throw std::domain_error("unit-function value outside [0, 1]: " +
                            rational_to_string(v));
  }
  Rat& slot = values_[static_cast<std::size_t>(index_of(unit))];
  total_ += v - slot;
  slot = v;
}

Rat UnitFunction::mean() const {
  if (units_.empty()) return Rat(0);
  return total_ / static_cast<long>(units_.size());
}

Rat pair_margin(const Rat& x, const Rat& y, const Rat& z) {
  return x * y + y * z + z * x - Rat(5, 8) * (x + y + z);
}

RearrangedValues decreasing_rearrangement(const UnitFunction& f) {
  std::vector<std::int64_t> order(static_cast<std::size_t>(f.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&f](std::int64_t lhs, std::int64_t rhs) {
              int c = cmp(f.value_at(lhs), f.value_at(rhs));
              if (c != 0) return c > 0;
              return f.unit_list()[static_cast<std::size_t>(lhs)] <
                     f.unit_list()[static_cast<std::size_t>(rhs)];
            });
  RearrangedValues out;
  out.values.reserve(order.size());
  out.units.reserve(order.size());
  for (std::int64_t idx : order) {
    out.values.push_back(f.value_at(idx));
    out.units.push_back(f.unit_list()[static_cast<std::size_t>(idx)]);
  }
  return out;
}

mod::ResidueSet level_set(const UnitFunction& f, const Rat& threshold) {
  mod::ResidueSet s(f.m());
  for (std::int64_t i = 0; i < f.size(); ++i) {
    if (f.value_at(i) >= threshold) {
      s.insert(f.unit_list()[static_cast<std::size_t>(i)]);
    }
  }
  return s;
}

UnitFunction marginalize(const UnitFunction& f, std::int64_t d) {
  const std::int64_t m = f.m();
  if (d <= 1 || m % d != 0) {
    throw std::invalid_argument("marginalize: " + std::to_string(d) +
                                " does not divide " + std::to_string(m));
  }
  const std::int64_t rest = m / d;
  if (std::gcd(rest, d) != 1) {
    throw std::invalid_argument("marginalize: " + std::to_string(d) +
                                " shares a factor with " +
                                std::to_string(rest));
  }
  mod::Modulus sub = rest % 2 == 0 ? mod::analyze_modulus_relaxed(rest)
                                   : mod::analyze_modulus(rest);
  const mod::CrtCoordinates crt = mod::make_crt(rest, d);
  const std::vector<std::int64_t> fiber_units = mod::units(d).members();
  UnitFunction g(sub, Rat(0));
  for (std::int64_t x : g.unit_list()) {
    Rat acc = 0;
    for (std::int64_t y : fiber_units) acc += f.value(crt.join(x, y));
    g.set_value(x, acc / static_cast<long>(fiber_units.size()));
  }
  return g;
}

UnitFunction fiber(const UnitFunction& f, std::int64_t d, std::int64_t a) {
  const std::int64_t m = f.m();
  if (d <= 1 || m % d != 0) {
    throw std::invalid_argument("fiber: " + std::to_string(d) +
                                " does not divide " + std::to_string(m));
  }
  const std::int64_t rest = m / d;
  if (std::gcd(rest, d) != 1) {
    throw std::invalid_argument("fiber: " + std::to_string(d) +
                                " shares a factor with " + std::to_string(rest));
  }
  if (rest > 1 && std::gcd(a % rest, rest) != 1) {
    throw std::domain_error("fiber: " + std::to_string(a) +
                            " is not a unit modulo " + std::to_string(rest));
  }
  mod::Modulus sub = d % 2 == 0 ? mod::analyze_modulus_relaxed(d)
                                : mod::analyze_modulus(d);
  const mod::CrtCoordinates crt = mod::make_crt(rest, d);
  UnitFunction g(sub, Rat(0));
  for (std::int64_t y : g.unit_list()) {
    g.set_value(y, f.value(crt.join(a % rest, y)));
  }
  return g;
}

UnitFunction lift(const UnitFunction& f, const mod::Modulus& target) {
  if (target.m % f.m() != 0) {
    throw std::invalid_argument("lift: " + std::to_string(f.m()) +
                                " does not divide " + std::to_string(target.m));
  }
  UnitFunction g(target, Rat(0));
  for (std::int64_t x : g.unit_list()) {
    g.set_value(x, f.value(x % f.m()));
  }
  return g;
}

}  // namespace terngold::unitfn
