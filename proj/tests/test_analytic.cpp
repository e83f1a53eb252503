#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "terngold/density.hpp"
#include "terngold/rational.hpp"
#include "terngold/sieve.hpp"
#include "terngold/spectrum.hpp"
#include "terngold/subset_spec.hpp"
#include "terngold/wtrick.hpp"

using namespace terngold;
using namespace terngold::fourier;

namespace {

double max_rel_gap(const std::vector<std::complex<double>>& u,
                   const std::vector<std::complex<double>>& v) {
  REQUIRE(u.size() == v.size());
  double scale = 1.0;
  for (const auto& c : u) scale = std::max(scale, std::abs(c));
  double worst = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    worst = std::max(worst, std::abs(u[i] - v[i]) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("transform of a point mass is flat") {
  for (std::size_t n : {3u, 7u, 31u}) {
    std::vector<double> f(n, 0.0);
    f[0] = 1.0;
    const auto fhat = dft_direct(f);
    for (const auto& c : fhat) {
      CHECK(std::abs(c - std::complex<double>(1.0, 0.0)) < 1e-12);
    }
    // shifting the mass to x rotates phase but keeps unit magnitude
    std::vector<double> g(n, 0.0);
    g[2] = 1.0;
    for (const auto& c : dft_direct(g)) CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
  }
}

TEST_CASE("transform of a constant concentrates at zero") {
  const std::size_t n = 17;
  std::vector<double> f(n, 1.0);
  const auto fhat = dft_direct(f);
  CHECK(std::abs(fhat[0] - std::complex<double>(17.0, 0.0)) < 1e-12);
  for (std::size_t r = 1; r < n; ++r) CHECK(std::abs(fhat[r]) < 1e-11);
}

TEST_CASE("chirp transform matches the direct evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 4.0);
  for (std::size_t n : {2u, 3u, 5u, 17u, 257u, 1009u}) {
    std::vector<double> f(n);
    for (auto& v : f) v = dist(rng);
    const auto fast = dft_fast(f);
    const auto direct = dft_direct(f);
    CHECK(max_rel_gap(fast, direct) < 1e-11);
  }
}

TEST_CASE("energy identity holds in both paths") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (std::size_t n : {257u, 1009u}) {
    std::vector<double> f(n);
    for (auto& v : f) v = dist(rng);
    for (bool fast : {false, true}) {
      const auto rep = fourier_transform(f, fast);
      CHECK(rep.n == static_cast<std::int64_t>(n));
      CHECK(rep.fast == fast);
      CHECK(rep.values.size() == n);
      CHECK(rep.parseval_rel_err < 1e-12);
      double rhs = 0;
      for (double v : f) rhs += v * v;
      CHECK(rep.parseval_rhs == doctest::Approx(n * rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("transform inputs are validated") {
  const std::vector<double> composite(9, 1.0);
  CHECK_THROWS_AS(fourier_transform(composite, true), std::invalid_argument);
  CHECK_THROWS_AS(fourier_transform(composite, false), std::invalid_argument);
  const std::vector<double> single(1, 1.0);
  CHECK_THROWS_AS(fourier_transform(single), std::invalid_argument);
  std::vector<double> negative(7, 1.0);
  negative[3] = -0.5;
  CHECK_THROWS_AS(fourier_transform(negative), std::invalid_argument);
  std::vector<double> poisoned(7, 1.0);
  poisoned[2] = std::nan("");
  CHECK_THROWS_AS(fourier_transform(poisoned), std::invalid_argument);
}

TEST_CASE("uniform measure has a silent spectrum") {
  const std::size_t n = 101;
  const std::vector<double> mu(n, 1.0 / static_cast<double>(n));
  std::array<std::vector<double>, 3> a;
  for (auto& ai : a) ai.assign(n, 1.0 / (2.0 * static_cast<double>(n)));
  const auto rep = pseudorandomness_report(mu, a, 2.5, 0.4);
  CHECK(rep.n == 101);
  CHECK(rep.eta_observed < 1e-12);
  for (int i = 0; i < 3; ++i) {
    CHECK(rep.majorized[i]);
    CHECK(rep.deltas[i] == doctest::Approx(0.5).epsilon(1e-12));
    // constant minorant: transform mass sits entirely at frequency zero
    CHECK(rep.lq_norms[i] == doctest::Approx(0.5).epsilon(1e-10));
  }
  CHECK(rep.min_delta_slack == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.mean_condition);  // 0.5 >= 0.4
  const auto tight = pseudorandomness_report(mu, a, 2.5, 0.6);
  CHECK_FALSE(tight.mean_condition);  // 0.5 < 0.6
}

TEST_CASE("majorization violations are flagged") {
  const std::size_t n = 11;
  const std::vector<double> mu(n, 0.1);
  std::array<std::vector<double>, 3> a;
  for (auto& ai : a) ai.assign(n, 0.05);
  a[1][4] = 0.2;  // pokes above the majorant
  const auto rep = pseudorandomness_report(mu, a, 2.5, 0.01);
  CHECK(rep.majorized[0]);
  CHECK_FALSE(rep.majorized[1]);
  CHECK(rep.majorized[2]);
}

TEST_CASE("pseudorandomness inputs are validated") {
  const std::vector<double> mu(7, 0.1);
  std::array<std::vector<double>, 3> a;
  for (auto& ai : a) ai.assign(7, 0.05);
  CHECK_THROWS_AS(pseudorandomness_report(mu, a, 2.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(pseudorandomness_report(mu, a, 3.0, 0.1),
                  std::invalid_argument);
  std::array<std::vector<double>, 3> short_minorants = a;
  short_minorants[2].pop_back();
  CHECK_THROWS_AS(pseudorandomness_report(mu, short_minorants, 2.5, 0.1),
                  std::invalid_argument);
}

TEST_CASE("weight profile enforces its parameter window") {
  const auto t = primes::sieve(10'000);
  const std::array<primes::PrimeSubsetSpec, 3> all = {
      primes::PrimeSubsetSpec::parse("all"), primes::PrimeSubsetSpec::parse("all"),
      primes::PrimeSubsetSpec::parse("all")};
  using wtrick::w_trick_weights;
  CHECK_THROWS_AS(w_trick_weights(2, 101, all, Rat(1, 10), Rat(1, 1000), t),
                  std::invalid_argument);  // z too small
  CHECK_THROWS_AS(w_trick_weights(4, 100, all, Rat(1, 10), Rat(1, 1000), t),
                  std::invalid_argument);  // even target
  CHECK_THROWS_AS(w_trick_weights(4, 101, all, Rat(5, 12), Rat(1, 1000), t),
                  std::domain_error);  // delta at the edge
  CHECK_THROWS_AS(w_trick_weights(4, 101, all, Rat(0), Rat(1, 1000), t),
                  std::domain_error);
  CHECK_THROWS_AS(w_trick_weights(4, 101, all, Rat(1, 10), Rat(1, 500), t),
                  std::domain_error);  // eta = delta/50 not strict
  CHECK_THROWS_AS(w_trick_weights(4, 101, all, Rat(1, 10), Rat(0), t),
                  std::domain_error);
  wtrick::WTrickOptions tiny;
  tiny.w_bound = 100;
  CHECK_THROWS_AS(
      w_trick_weights(12, 101, all, Rat(1, 10), Rat(1, 1000), t, tiny),
      std::invalid_argument);  // 2*3*5*7*11 exceeds the bound
  CHECK_THROWS_AS(
      w_trick_weights(4, 99'999, all, Rat(1, 10), Rat(1, 1000), t),
      std::invalid_argument);  // sieve too short for the log sums
}

TEST_CASE("weights reproduce the clamped log-mass formula") {
  const std::int64_t n = 1'000'003;
  const auto t = primes::sieve(700'000);
  const std::array<primes::PrimeSubsetSpec, 3> all = {
      primes::PrimeSubsetSpec::parse("all"), primes::PrimeSubsetSpec::parse("all"),
      primes::PrimeSubsetSpec::parse("all")};
  const Rat delta(1, 10), eta(1, 1000);
  const auto prof = wtrick::w_trick_weights(4, n, all, delta, eta, t);

  CHECK(prof.w == 6);
  CHECK(prof.effective_delta == Rat(3, 80));
  CHECK(prof.effective_eta == Rat(11, 800));
  // derived parameters always land inside the witness search window
  CHECK_NOTHROW(
      dens::ThresholdParams::create(prof.effective_delta, prof.effective_eta));

  // thresholds: (5/8 + 3delta/8)*phi and (5/8 - (5eta/4 + delta/8))*phi
  CHECK(prof.means[0].threshold == Rat(53, 80) * 2);
  CHECK(prof.means[1].threshold == Rat(489, 800) * 2);
  CHECK(prof.means[2].threshold == prof.means[1].threshold);

  // independent recomputation of each frozen weight
  for (std::int64_t b : {std::int64_t{1}, std::int64_t{5}}) {
    double mass = 0;
    for (std::int64_t p : t.primes_upto(700'000)) {
      if (p % 6 == b && 3 * p < 2 * n) mass += std::log(static_cast<double>(p));
    }
    const double expected = std::clamp(
        3.0 * 2.0 / (2.0 * static_cast<double>(n)) * mass - 1.0 / 80.0, 0.0,
        1.0);
    for (int i = 0; i < 3; ++i) {
      CHECK(prof.weights[i].value(b).get_d() ==
            doctest::Approx(expected).epsilon(1e-9));
    }
  }

  for (int i = 0; i < 3; ++i) {
    CHECK(prof.means[i].holds);
    CHECK_FALSE(prof.means[i].marginal);
    CHECK(prof.means[i].total ==
          prof.weights[i].value(1) + prof.weights[i].value(5));
  }
  CHECK(prof.all_means_hold);
}

TEST_CASE("congruence witness runs both readings at small W") {
  const std::int64_t n = 1'000'003;
  const auto t = primes::sieve(700'000);
  const std::array<primes::PrimeSubsetSpec, 3> all = {
      primes::PrimeSubsetSpec::parse("all"), primes::PrimeSubsetSpec::parse("all"),
      primes::PrimeSubsetSpec::parse("all")};
  const auto prof =
      wtrick::w_trick_weights(4, n, all, Rat(1, 10), Rat(1, 1000), t);
  const auto cw = wtrick::find_congruence_witness(prof);

  CHECK(cw.status == dens::WitnessStatus::Ok);
  CHECK(cw.direct_ran);
  CHECK(cw.odd_part_ran);
  CHECK(cw.odd_modulus == 3);

  const std::int64_t x = n % 6;
  CHECK(x == 1);
  const auto& d = cw.direct.witness;
  CHECK((d.a + d.b + d.c - x) % 6 == 0);
  CHECK(d.margin > 0);
  CHECK(d.sum > Rat(3, 2));
  CHECK(d.product > 0);
  CHECK(d.fa == prof.weights[0].value(d.a));
  CHECK(d.fb == prof.weights[1].value(d.b));
  CHECK(d.fc == prof.weights[2].value(d.c));

  CHECK(cw.odd_part.status == dens::WitnessStatus::Ok);
  for (int i = 0; i < 3; ++i) {
    CHECK(cw.joined[i] % 2 == 1);  // pinned even-prime coordinate
    CHECK(cw.joined[i] >= 0);
    CHECK(cw.joined[i] < 6);
  }
  CHECK(cw.joined[0] % 3 == cw.odd_part.witness.a);
  CHECK(cw.joined[1] % 3 == cw.odd_part.witness.b);
  CHECK(cw.joined[2] % 3 == cw.odd_part.witness.c);
  CHECK((cw.joined[0] + cw.joined[1] + cw.joined[2] - x) % 6 == 0);
}

TEST_CASE("congruence witness at W = 210 joins across the split") {
  const std::int64_t n = 1'000'003;
  const auto t = primes::sieve(700'000);
  const std::array<primes::PrimeSubsetSpec, 3> all = {
      primes::PrimeSubsetSpec::parse("all"), primes::PrimeSubsetSpec::parse("all"),
      primes::PrimeSubsetSpec::parse("all")};
  const auto prof =
      wtrick::w_trick_weights(8, n, all, Rat(1, 10), Rat(1, 1000), t);
  CHECK(prof.w == 210);
  CHECK(prof.all_means_hold);

  const auto cw = wtrick::find_congruence_witness(prof);
  CHECK(cw.status == dens::WitnessStatus::Ok);
  CHECK(cw.direct_ran);  // 210 is under the direct-scan cap
  CHECK(cw.odd_modulus == 105);
  CHECK(cw.odd_part.status == dens::WitnessStatus::Ok);

  const std::int64_t x = n % 210;
  const auto& d = cw.direct.witness;
  CHECK((d.a + d.b + d.c - x) % 210 == 0);
  CHECK(d.margin > 0);
  for (int i = 0; i < 3; ++i) {
    CHECK(cw.joined[i] % 2 == 1);
    CHECK(std::gcd(cw.joined[i], std::int64_t{210}) == 1);
  }
  CHECK(cw.joined[0] % 105 == cw.odd_part.witness.a);
  CHECK(cw.joined[1] % 105 == cw.odd_part.witness.b);
  CHECK(cw.joined[2] % 105 == cw.odd_part.witness.c);
  CHECK((cw.joined[0] + cw.joined[1] + cw.joined[2] - x) % 210 == 0);

  // the odd-part values really are the weights restricted to odd residues
  CHECK(cw.odd_part.witness.fa == prof.weights[0].value(cw.joined[0]));
  CHECK(cw.odd_part.witness.fb == prof.weights[1].value(cw.joined[1]));
  CHECK(cw.odd_part.witness.fc == prof.weights[2].value(cw.joined[2]));
}

TEST_CASE("failed mass condition reports before any witness search") {
  const std::int64_t n = 10'007;
  const auto t = primes::sieve(7'000);
  const std::array<primes::PrimeSubsetSpec, 3> sparse = {
      primes::PrimeSubsetSpec::parse("list:7"),
      primes::PrimeSubsetSpec::parse("all"),
      primes::PrimeSubsetSpec::parse("all")};
  const auto prof =
      wtrick::w_trick_weights(4, n, sparse, Rat(1, 10), Rat(1, 1000), t);
  CHECK_FALSE(prof.means[0].holds);
  CHECK_FALSE(prof.all_means_hold);

  const auto cw = wtrick::find_congruence_witness(prof);
  CHECK(cw.status == dens::WitnessStatus::PreconditionFails);
  CHECK(cw.detail.find("mass condition 1 fails") != std::string::npos);
  CHECK_FALSE(cw.direct_ran);
}
