#include "terngold/wtrick.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "terngold/modulus.hpp"

namespace terngold::wtrick {

namespace {

struct Kahan {
  double s = 0, c = 0;
  void add(double v) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace

WTrickProfile w_trick_weights(std::int64_t z, std::int64_t n,
                              const std::array<primes::PrimeSubsetSpec, 3>& specs,
                              const Rat& delta, const Rat& eta,
                              const primes::PrimeTable& table,
                              const WTrickOptions& opt) {
  if (z < 3) {
    throw std::invalid_argument("threshold z must be at least 3");
  }
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("target n must be odd and at least 3");
  }
  if (!(delta > 0) || !(delta < Rat(5, 12))) {
    throw std::domain_error("delta = " + rational_to_string(delta) +
                            " must lie strictly between 0 and 5/12");
  }
  if (!(eta > 0) || !(eta < delta / 50)) {
    throw std::domain_error("eta = " + rational_to_string(eta) +
                            " must lie strictly between 0 and delta/50 = " +
                            rational_to_string(delta / 50));
  }
  std::int64_t w = 1;
  for (std::int64_t p = 2; p < z; ++p) {
    if (!mod::is_prime(p)) continue;
    if (w > opt.w_bound / p) {
      throw std::invalid_argument("W exceeds the configured bound " +
                                  std::to_string(opt.w_bound));
    }
    w *= p;
  }
  const std::int64_t limit = (2 * n - 1) / 3;  // largest x with 3x < 2n
  if (table.limit() < limit) {
    throw std::invalid_argument("sieve covers only " +
                                std::to_string(table.limit()) +
                                " but the weights need " +
                                std::to_string(limit));
  }

  WTrickProfile prof;
  prof.z = z;
  prof.w = w;
  prof.n = n;
  prof.delta = delta;
  prof.eta = eta;
  prof.specs = specs;
  prof.effective_delta = Rat(3, 8) * delta;
  prof.effective_eta = Rat(5, 4) * eta + delta / 8;

  const mod::Modulus wm = w % 2 == 0 ? mod::analyze_modulus_relaxed(w)
                                     : mod::analyze_modulus(w);
  const double scale =
      3.0 * static_cast<double>(wm.phi) / (2.0 * static_cast<double>(n));
  const double delta8 = rational_to_double(delta) / 8.0;
  const double eps = std::numeric_limits<double>::epsilon();

  const Rat lo1 = (Rat(5, 8) + prof.effective_delta) * wm.phi;
  const Rat lo23 = (Rat(5, 8) - prof.effective_eta) * wm.phi;

  for (int i = 0; i < 3; ++i) {
    const std::vector<std::int64_t> members =
        primes::subset_members(specs[static_cast<std::size_t>(i)], table,
                               limit);
    std::vector<Kahan> acc(static_cast<std::size_t>(w));
    for (std::int64_t p : members) {
      acc[static_cast<std::size_t>(p % w)].add(
          std::log(static_cast<double>(p)));
    }
    unitfn::UnitFunction f(wm, Rat(0));
    double err_total = 0;
    for (std::int64_t b : f.unit_list()) {
      const double mass = acc[static_cast<std::size_t>(b)].s;
      const double raw = scale * mass - delta8;
      const double clamped = std::clamp(raw, 0.0, 1.0);
      f.set_value(b, rational_from_double(clamped));
      err_total += 4.0 * eps * (scale * mass + 1.0);
    }
    MeanCondition& mc = prof.means[static_cast<std::size_t>(i)];
    mc.total = f.total();
    mc.threshold = i == 0 ? lo1 : lo23;
    mc.holds = mc.total > mc.threshold;
    mc.error_bound = err_total;
    mc.marginal =
        std::fabs(rational_to_double(mc.total - mc.threshold)) <= err_total;
    prof.weights[static_cast<std::size_t>(i)] = std::move(f);
  }
  prof.all_means_hold =
      prof.means[0].holds && prof.means[1].holds && prof.means[2].holds;
  return prof;
}

CongruenceWitness find_congruence_witness(const WTrickProfile& profile,
                                          const WTrickOptions& opt) {
  CongruenceWitness cw;
  if (!profile.all_means_hold) {
    cw.status = dens::WitnessStatus::PreconditionFails;
    for (int i = 0; i < 3; ++i) {
      if (!profile.means[static_cast<std::size_t>(i)].holds) {
        cw.detail = "mass condition " + std::to_string(i + 1) +
                    " fails: total = " +
                    rational_to_string(
                        profile.means[static_cast<std::size_t>(i)].total) +
                    " vs threshold " +
                    rational_to_string(
                        profile.means[static_cast<std::size_t>(i)].threshold);
        break;
      }
    }
    return cw;
  }
  const dens::ThresholdParams params = dens::ThresholdParams::create(
      profile.effective_delta, profile.effective_eta);
  const std::int64_t w = profile.w;
  const std::int64_t x = profile.n % w;
  dens::WitnessOptions wopt;
  wopt.exec = opt.exec;

  if (w <= opt.brute_bound) {
    cw.direct_ran = true;
    cw.direct = dens::find_support_witness(
        profile.weights[0], profile.weights[1], profile.weights[2], params, x,
        dens::WitnessMode::Brute, wopt);
  }

  const std::int64_t w_odd = w % 2 == 0 ? w / 2 : w;
  cw.odd_part_ran = true;
  cw.odd_modulus = w_odd;
  if (w % 2 != 0) {
    cw.odd_part = dens::find_support_witness(
        profile.weights[0], profile.weights[1], profile.weights[2], params, x,
        dens::WitnessMode::Constructive, wopt);
    cw.joined = {cw.odd_part.witness.a, cw.odd_part.witness.b,
                 cw.odd_part.witness.c};
  } else if (w_odd == 1) {
    // Z_W = Z_2 with unit set {1}; the odd part is trivial.
    const mod::Modulus one = mod::analyze_modulus(1);
    std::array<unitfn::UnitFunction, 3> g;
    for (int i = 0; i < 3; ++i) {
      g[static_cast<std::size_t>(i)] = unitfn::UnitFunction(one, Rat(0));
      g[static_cast<std::size_t>(i)].set_value(
          0, profile.weights[static_cast<std::size_t>(i)].value(1));
    }
    cw.odd_part = dens::find_support_witness(
        g[0], g[1], g[2], params, 0, dens::WitnessMode::Constructive, wopt);
    if (cw.odd_part.status == dens::WitnessStatus::Ok) {
      cw.joined = {1, 1, 1};
    }
  } else {
    std::array<unitfn::UnitFunction, 3> g;
    for (int i = 0; i < 3; ++i) {
      g[static_cast<std::size_t>(i)] =
          unitfn::fiber(profile.weights[static_cast<std::size_t>(i)], w_odd, 1);
    }
    cw.odd_part = dens::find_support_witness(g[0], g[1], g[2], params,
                                             x % w_odd,
                                             dens::WitnessMode::Constructive,
                                             wopt);
    if (cw.odd_part.status == dens::WitnessStatus::Ok) {
      const mod::CrtCoordinates crt = mod::make_crt(2, w_odd);
      cw.joined = {crt.join(1, cw.odd_part.witness.a),
                   crt.join(1, cw.odd_part.witness.b),
                   crt.join(1, cw.odd_part.witness.c)};
    }
  }

  const dens::WitnessReport& lead = cw.direct_ran ? cw.direct : cw.odd_part;
  cw.status = lead.status;
  cw.detail = lead.detail;
  return cw;
}

}  // namespace terngold::wtrick
