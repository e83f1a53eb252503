#include "terngold/density.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "terngold/modulus.hpp"
#include "terngold/residue_set.hpp"

namespace terngold::dens {

namespace {

using unitfn::UnitFunction;
using unitfn::pair_margin;

WitnessTriple make_triple(const UnitFunction& f1, const UnitFunction& f2,
                          const UnitFunction& f3, std::int64_t a,
                          std::int64_t b, std::int64_t c) {
  WitnessTriple w;
  w.a = a;
  w.b = b;
  w.c = c;
  w.fa = f1.value(a);
  w.fb = f2.value(b);
  w.fc = f3.value(c);
  w.margin = pair_margin(w.fa, w.fb, w.fc);
  w.sum = w.fa + w.fb + w.fc;
  w.product = w.fa * w.fb * w.fc;
  return w;
}

void require_same_modulus(const UnitFunction& f1, const UnitFunction& f2,
                          const UnitFunction& f3) {
  if (f1.m() != f2.m() || f1.m() != f3.m()) {
    throw std::invalid_argument("the three functions live on different moduli");
  }
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

std::string mean_gate_detail(const UnitFunction& f1, const UnitFunction& f2,
                             const UnitFunction& f3,
                             const ThresholdParams& params) {
  const Rat lo1 = Rat(5, 8) + params.delta;
  const Rat lo23 = Rat(5, 8) - params.eta;
  if (!(f1.mean() > lo1)) {
    return "mean(f1) = " + rational_to_string(f1.mean()) +
           " fails > 5/8 + delta = " + rational_to_string(lo1);
  }
  if (!(f2.mean() > lo23)) {
    return "mean(f2) = " + rational_to_string(f2.mean()) +
           " fails > 5/8 - eta = " + rational_to_string(lo23);
  }
  if (!(f3.mean() > lo23)) {
    return "mean(f3) = " + rational_to_string(f3.mean()) +
           " fails > 5/8 - eta = " + rational_to_string(lo23);
  }
  return {};
}

struct BruteBest {
  bool any = false;
  Rat key;
  std::int64_t a = -1, b = -1, c = -1;
};

// Strict total order on candidates: larger key first, then the
// lexicographically smallest triple, so parallel merges are deterministic.
bool beats(const BruteBest& cur, const Rat& key, std::int64_t a,
           std::int64_t b, std::int64_t c) {
  if (!cur.any) return true;
  int s = cmp(key, cur.key);
  if (s != 0) return s > 0;
  if (a != cur.a) return a < cur.a;
  if (b != cur.b) return b < cur.b;
  return c < cur.c;
}

// Scan all unit pairs (a, b); c = x - a - b is forced.  key_of returns the
// selection key for a candidate, or nothing to skip it.
template <typename KeyFn>
BruteBest scan_pairs(const UnitFunction& f1, const UnitFunction& f2,
                     const UnitFunction& f3, std::int64_t x, Exec exec,
                     long long& scanned, KeyFn key_of) {
  const auto& ua = f1.unit_list();
  const auto& ub = f2.unit_list();
  const std::int64_t m = f1.m();
  const std::int64_t na = static_cast<std::int64_t>(ua.size());
  const std::int64_t nb = static_cast<std::int64_t>(ub.size());
  scanned += static_cast<long long>(na) * nb;
  BruteBest best;
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < na; ++i) {
      const std::int64_t a = ua[static_cast<std::size_t>(i)];
      for (std::int64_t j = 0; j < nb; ++j) {
        const std::int64_t b = ub[static_cast<std::size_t>(j)];
        const std::int64_t c = mod_reduce(x - a - b, m);
        if (!f3.is_unit(c)) continue;
        std::optional<Rat> key = key_of(a, b, c);
        if (key && beats(best, *key, a, b, c)) {
          best = BruteBest{true, std::move(*key), a, b, c};
        }
      }
    }
    return best;
  }
#pragma omp parallel
  {
    BruteBest local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < na; ++i) {
      const std::int64_t a = ua[static_cast<std::size_t>(i)];
      for (std::int64_t j = 0; j < nb; ++j) {
        const std::int64_t b = ub[static_cast<std::size_t>(j)];
        const std::int64_t c = mod_reduce(x - a - b, m);
        if (!f3.is_unit(c)) continue;
        std::optional<Rat> key = key_of(a, b, c);
        if (key && beats(local, *key, a, b, c)) {
          local = BruteBest{true, std::move(*key), a, b, c};
        }
      }
    }
#pragma omp critical
    {
      if (local.any && beats(best, local.key, local.a, local.b, local.c)) {
        best = local;
      }
    }
  }
  return best;
}

struct StepOutcome {
  WitnessStatus status = WitnessStatus::Ok;
  std::string detail;
  std::int64_t a = -1, b = -1, c = -1;
};

// The constructive recursion.  Contract: means already gated, modulus
// coprime to 30.  Returns units (a, b, c) of Z_m with a + b + c = x and a
// strictly positive margin at the function values.
StepOutcome margin_recursive(const UnitFunction& f1, const UnitFunction& f2,
                             const UnitFunction& f3, std::int64_t x,
                             long long& scanned) {
  const std::int64_t m = f1.m();
  if (m == 1) {
    if (!(pair_margin(f1.value(0), f2.value(0), f3.value(0)) > 0)) {
      return {WitnessStatus::CertificateFail,
              "base case: margin at the global means is not positive", -1, -1,
              -1};
    }
    return {WitnessStatus::Ok, "", 0, 0, 0};
  }

  const std::int64_t p = f1.modulus().prime_factors.back();
  const std::int64_t rest = m / p;

  UnitFunction g1 = unitfn::marginalize(f1, p);
  UnitFunction g2 = unitfn::marginalize(f2, p);
  UnitFunction g3 = unitfn::marginalize(f3, p);
  StepOutcome sub = margin_recursive(g1, g2, g3, x % rest, scanned);
  if (sub.status != WitnessStatus::Ok) return sub;

  UnitFunction h1 = unitfn::fiber(f1, p, sub.a);
  UnitFunction h2 = unitfn::fiber(f2, p, sub.b);
  UnitFunction h3 = unitfn::fiber(f3, p, sub.c);
  const unitfn::RearrangedValues r1 = unitfn::decreasing_rearrangement(h1);
  const unitfn::RearrangedValues r2 = unitfn::decreasing_rearrangement(h2);
  const unitfn::RearrangedValues r3 = unitfn::decreasing_rearrangement(h3);
  const std::int64_t n = p - 1;

  // Maximal-margin index triple with i + j + k >= n; the averaged bound
  // guarantees a positive one exists because the fiber means carry a
  // positive margin.
  bool found = false;
  Rat best_margin;
  std::int64_t bi = -1, bj = -1, bk = -1;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      for (std::int64_t k = std::max<std::int64_t>(0, n - i - j); k < n; ++k) {
        ++scanned;
        Rat mg = pair_margin(r1.values[static_cast<std::size_t>(i)],
                             r2.values[static_cast<std::size_t>(j)],
                             r3.values[static_cast<std::size_t>(k)]);
        bool better = !found;
        if (found) {
          int s = cmp(mg, best_margin);
          better = s > 0 || (s == 0 && std::array{i, j, k} <
                                           std::array{bi, bj, bk});
        }
        if (better) {
          found = true;
          best_margin = std::move(mg);
          bi = i;
          bj = j;
          bk = k;
        }
      }
    }
  }
  if (!found || !(best_margin > 0)) {
    return {WitnessStatus::CertificateFail,
            "no index triple with positive margin over the rearranged values "
            "at m = " +
                std::to_string(m),
            -1, -1, -1};
  }

  const mod::ResidueSet I =
      unitfn::level_set(h1, r1.values[static_cast<std::size_t>(bi)]);
  const mod::ResidueSet J =
      unitfn::level_set(h2, r2.values[static_cast<std::size_t>(bj)]);
  const mod::ResidueSet K =
      unitfn::level_set(h3, r3.values[static_cast<std::size_t>(bk)]);
  if (I.cardinality() + J.cardinality() + K.cardinality() < p + 2) {
    return {WitnessStatus::CertificateFail,
            "level sets too small: |I|+|J|+|K| = " +
                std::to_string(I.cardinality() + J.cardinality() +
                               K.cardinality()) +
                " < p + 2 = " + std::to_string(p + 2),
            -1, -1, -1};
  }

  // |I|+|J|+|K|-2 >= p, so the three-set sumset is all of Z_p and the
  // target coordinate is reachable.
  const std::int64_t xp = x % p;
  const std::vector<std::int64_t> iu = I.members();
  const std::vector<std::int64_t> ju = J.members();
  bool cov = false;
  Rat cov_margin;
  std::int64_t bu = -1, bv = -1, bw = -1;
  for (std::int64_t u : iu) {
    for (std::int64_t v : ju) {
      ++scanned;
      const std::int64_t w = mod_reduce(xp - u - v, p);
      if (!K.test(w)) continue;
      Rat mg = pair_margin(h1.value(u), h2.value(v), h3.value(w));
      bool better = !cov;
      if (cov) {
        int s = cmp(mg, cov_margin);
        better = s > 0 || (s == 0 && std::array{u, v, w} <
                                         std::array{bu, bv, bw});
      }
      if (better) {
        cov = true;
        cov_margin = std::move(mg);
        bu = u;
        bv = v;
        bw = w;
      }
    }
  }
  if (!cov) {
    return {WitnessStatus::CertificateFail,
            "no residue triple covers the target despite the sumset bound at "
            "p = " +
                std::to_string(p),
            -1, -1, -1};
  }
  if (!(cov_margin > 0)) {
    return {WitnessStatus::CertificateFail,
            "covering triple has nonpositive margin at p = " +
                std::to_string(p),
            -1, -1, -1};
  }

  const mod::CrtCoordinates crt = mod::make_crt(rest, p);
  return {WitnessStatus::Ok, "", crt.join(sub.a, bu), crt.join(sub.b, bv),
          crt.join(sub.c, bw)};
}

}  // namespace

ThresholdParams ThresholdParams::create(const Rat& delta, const Rat& eta) {
  if (!(delta > 0) || !(delta < Rat(5, 32))) {
    throw std::domain_error("delta = " + rational_to_string(delta) +
                            " must lie strictly between 0 and 5/32");
  }
  const Rat cap = Rat(2, 5) * delta;
  if (!(eta > 0) || !(eta < cap)) {
    throw std::domain_error("eta = " + rational_to_string(eta) +
                            " must lie strictly between 0 and (2/5)*delta = " +
                            rational_to_string(cap));
  }
  return {delta, eta};
}

const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Ok:
      return "OK";
    case WitnessStatus::PreconditionFails:
      return "PRECONDITION_FAILS";
    case WitnessStatus::CertificateFail:
      return "CERTIFICATE_FAIL";
  }
  return "?";
}

WitnessReport find_margin_witness(const UnitFunction& f1,
                                  const UnitFunction& f2,
                                  const UnitFunction& f3,
                                  const ThresholdParams& params,
                                  std::int64_t x, WitnessMode mode,
                                  const WitnessOptions& opt) {
  require_same_modulus(f1, f2, f3);
  WitnessReport rep;
  const mod::Modulus& mm = f1.modulus();
  if (!mm.coprime_to_30) {
    rep.status = WitnessStatus::PreconditionFails;
    rep.detail =
        "m = " + std::to_string(mm.m) + " is not coprime to 30";
    return rep;
  }
  for (std::int64_t q : mm.prime_factors) {
    if (q < opt.min_base_prime) {
      rep.status = WitnessStatus::PreconditionFails;
      rep.detail = "prime factor " + std::to_string(q) +
                   " is below the accepted minimum " +
                   std::to_string(opt.min_base_prime);
      return rep;
    }
  }
  std::string gate = mean_gate_detail(f1, f2, f3, params);
  if (!gate.empty()) {
    rep.status = WitnessStatus::PreconditionFails;
    rep.detail = std::move(gate);
    return rep;
  }
  x = mod_reduce(x, mm.m);

  if (mode == WitnessMode::Brute) {
    BruteBest best = scan_pairs(
        f1, f2, f3, x, opt.exec, rep.scanned,
        [&](std::int64_t a, std::int64_t b,
            std::int64_t c) -> std::optional<Rat> {
          return pair_margin(f1.value(a), f2.value(b), f3.value(c));
        });
    if (!best.any) {
      rep.status = WitnessStatus::CertificateFail;
      rep.detail = "no unit triple sums to " + std::to_string(x) +
                   " modulo " + std::to_string(mm.m);
      return rep;
    }
    rep.witness = make_triple(f1, f2, f3, best.a, best.b, best.c);
    if (!(rep.witness.margin > 0)) {
      rep.status = WitnessStatus::CertificateFail;
      rep.detail = "maximal margin " + rational_to_string(rep.witness.margin) +
                   " is not positive";
      return rep;
    }
    return rep;
  }

  StepOutcome so = margin_recursive(f1, f2, f3, x, rep.scanned);
  if (so.status != WitnessStatus::Ok) {
    rep.status = so.status;
    rep.detail = std::move(so.detail);
    return rep;
  }
  rep.witness = make_triple(f1, f2, f3, so.a, so.b, so.c);
  if (mod_reduce(rep.witness.a + rep.witness.b + rep.witness.c - x, mm.m) !=
      0) {
    rep.status = WitnessStatus::CertificateFail;
    rep.detail = "reconstructed triple misses the target congruence";
    return rep;
  }
  if (!(rep.witness.margin > 0)) {
    rep.status = WitnessStatus::CertificateFail;
    rep.detail = "reconstructed triple has nonpositive margin " +
                 rational_to_string(rep.witness.margin);
    return rep;
  }
  return rep;
}

WitnessReport find_support_witness_mod15(const UnitFunction& f1,
                                         const UnitFunction& f2,
                                         const UnitFunction& f3,
                                         std::int64_t v, Exec exec) {
  require_same_modulus(f1, f2, f3);
  if (f1.m() != 15) {
    throw std::invalid_argument("the support scan requires modulus 15, got " +
                                std::to_string(f1.m()));
  }
  WitnessReport rep;
  v = mod_reduce(v, 15);
  const Rat& s1 = f1.total();
  const Rat& s2 = f2.total();
  const Rat& s3 = f3.total();
  const Rat lhs = s1 * s2 + s2 * s3 + s3 * s1;
  const Rat rhs = 5 * (s1 + s2 + s3);
  if (!(lhs > rhs)) {
    rep.status = WitnessStatus::PreconditionFails;
    rep.detail = "sum hypothesis fails: F1 = " + rational_to_string(s1) +
                 ", F2 = " + rational_to_string(s2) +
                 ", F3 = " + rational_to_string(s3) + "; " +
                 rational_to_string(lhs) + " > " + rational_to_string(rhs) +
                 " does not hold strictly";
    return rep;
  }
  const Rat three_halves(3, 2);
  BruteBest best = scan_pairs(
      f1, f2, f3, v, exec, rep.scanned,
      [&](std::int64_t a, std::int64_t b,
          std::int64_t c) -> std::optional<Rat> {
        const Rat& fa = f1.value(a);
        const Rat& fb = f2.value(b);
        const Rat& fc = f3.value(c);
        if (sgn(fa) == 0 || sgn(fb) == 0 || sgn(fc) == 0) return std::nullopt;
        Rat sum = fa + fb + fc;
        if (!(sum > three_halves)) return std::nullopt;
        return sum;
      });
  if (!best.any) {
    rep.status = WitnessStatus::CertificateFail;
    rep.detail =
        "no unit triple with positive product and value sum above 3/2 "
        "reaches v = " +
        std::to_string(v);
    return rep;
  }
  rep.witness = make_triple(f1, f2, f3, best.a, best.b, best.c);
  return rep;
}

WitnessReport find_support_witness(const UnitFunction& f1,
                                   const UnitFunction& f2,
                                   const UnitFunction& f3,
                                   const ThresholdParams& params,
                                   std::int64_t x, WitnessMode mode,
                                   const WitnessOptions& opt) {
  require_same_modulus(f1, f2, f3);
  WitnessReport rep;
  const mod::Modulus& mm = f1.modulus();
  const std::int64_t m = mm.m;
  std::string gate = mean_gate_detail(f1, f2, f3, params);
  if (!gate.empty()) {
    rep.status = WitnessStatus::PreconditionFails;
    rep.detail = std::move(gate);
    return rep;
  }
  x = mod_reduce(x, m);

  const Rat three_halves(3, 2);
  if (mode == WitnessMode::Brute) {
    BruteBest best = scan_pairs(
        f1, f2, f3, x, opt.exec, rep.scanned,
        [&](std::int64_t a, std::int64_t b,
            std::int64_t c) -> std::optional<Rat> {
          const Rat& fa = f1.value(a);
          const Rat& fb = f2.value(b);
          const Rat& fc = f3.value(c);
          if (sgn(fa) == 0 || sgn(fb) == 0 || sgn(fc) == 0)
            return std::nullopt;
          Rat sum = fa + fb + fc;
          if (!(sum > three_halves)) return std::nullopt;
          return sum;
        });
    if (!best.any) {
      rep.status = WitnessStatus::CertificateFail;
      rep.detail =
          "exhaustive scan found no unit triple with positive product and "
          "value sum above 3/2 at x = " +
          std::to_string(x);
      return rep;
    }
    rep.witness = make_triple(f1, f2, f3, best.a, best.b, best.c);
    return rep;
  }

  if (m % 2 == 0) {
    rep.status = WitnessStatus::PreconditionFails;
    rep.detail = "constructive mode requires an odd modulus, got m = " +
                 std::to_string(m);
    return rep;
  }

  if (mm.coprime_to_30) {
    WitnessReport inner =
        find_margin_witness(f1, f2, f3, params, x, WitnessMode::Constructive,
                            opt);
    rep.scanned += inner.scanned;
    if (inner.status != WitnessStatus::Ok) {
      rep.status = inner.status;
      rep.detail = std::move(inner.detail);
      return rep;
    }
    rep.witness = inner.witness;
    if (!(sgn(rep.witness.product) > 0) || !(rep.witness.sum > three_halves)) {
      rep.status = WitnessStatus::CertificateFail;
      rep.detail =
          "positive margin failed to force the support conclusions";
      return rep;
    }
    return rep;
  }

  if (m % 15 == 0) {
    const std::int64_t rest = m / 15;
    UnitFunction g1 = unitfn::marginalize(f1, 15);
    UnitFunction g2 = unitfn::marginalize(f2, 15);
    UnitFunction g3 = unitfn::marginalize(f3, 15);
    WitnessReport inner =
        find_margin_witness(g1, g2, g3, params, x % rest,
                            WitnessMode::Constructive, opt);
    rep.scanned += inner.scanned;
    if (inner.status != WitnessStatus::Ok) {
      rep.status = inner.status;
      rep.detail = "after averaging out the Z_15 coordinate: " + inner.detail;
      return rep;
    }
    UnitFunction h1 = unitfn::fiber(f1, 15, inner.witness.a);
    UnitFunction h2 = unitfn::fiber(f2, 15, inner.witness.b);
    UnitFunction h3 = unitfn::fiber(f3, 15, inner.witness.c);
    WitnessReport s15 =
        find_support_witness_mod15(h1, h2, h3, x % 15, Exec::Serial);
    rep.scanned += s15.scanned;
    if (s15.status == WitnessStatus::PreconditionFails) {
      rep.status = WitnessStatus::CertificateFail;
      rep.detail =
          "the Z_15 sum hypothesis failed although the averaged margin is "
          "positive: " +
          s15.detail;
      return rep;
    }
    if (s15.status != WitnessStatus::Ok) {
      rep.status = s15.status;
      rep.detail = std::move(s15.detail);
      return rep;
    }
    const mod::CrtCoordinates crt = mod::make_crt(rest, 15);
    const std::int64_t a = crt.join(inner.witness.a, s15.witness.a);
    const std::int64_t b = crt.join(inner.witness.b, s15.witness.b);
    const std::int64_t c = crt.join(inner.witness.c, s15.witness.c);
    rep.witness = make_triple(f1, f2, f3, a, b, c);
    if (mod_reduce(a + b + c - x, m) != 0 ||
        !(sgn(rep.witness.product) > 0) ||
        !(rep.witness.sum > three_halves)) {
      rep.status = WitnessStatus::CertificateFail;
      rep.detail = "joined triple fails re-verification";
      return rep;
    }
    return rep;
  }

  // Exactly one of 3, 5 divides m: pull back along reduction from
  // M = lcm(m, 15), solve there, and reduce the witness.
  const std::int64_t g = std::gcd(m, static_cast<std::int64_t>(15));
  const std::int64_t big_m = m * (15 / g);
  const mod::Modulus big = mod::analyze_modulus(big_m);
  UnitFunction l1 = unitfn::lift(f1, big);
  UnitFunction l2 = unitfn::lift(f2, big);
  UnitFunction l3 = unitfn::lift(f3, big);
  WitnessReport inner = find_support_witness(l1, l2, l3, params, x,
                                             WitnessMode::Constructive, opt);
  rep.scanned += inner.scanned;
  if (inner.status != WitnessStatus::Ok) {
    rep.status = inner.status;
    rep.detail = std::move(inner.detail);
    return rep;
  }
  const std::int64_t a = inner.witness.a % m;
  const std::int64_t b = inner.witness.b % m;
  const std::int64_t c = inner.witness.c % m;
  rep.witness = make_triple(f1, f2, f3, a, b, c);
  if (mod_reduce(a + b + c - x, m) != 0 || !(sgn(rep.witness.product) > 0) ||
      !(rep.witness.sum > three_halves)) {
    rep.status = WitnessStatus::CertificateFail;
    rep.detail = "reduced triple fails re-verification";
    return rep;
  }
  return rep;
}

}  // namespace terngold::dens
