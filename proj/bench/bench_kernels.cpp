// Timed comparisons of each parallel/fast kernel against its serial or
// reference counterpart.  Informational only — correctness lives in the
// test suites.  Build target: bench_kernels.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "terngold/density.hpp"
#include "terngold/modulus.hpp"
#include "terngold/ntt.hpp"
#include "terngold/rational.hpp"
#include "terngold/residue_set.hpp"
#include "terngold/search.hpp"
#include "terngold/sequences.hpp"
#include "terngold/sieve.hpp"
#include "terngold/spectrum.hpp"
#include "terngold/unit_function.hpp"

using namespace terngold;

namespace {

template <typename F>
double time_ms(F&& f, int repeats = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

void row(const char* task, const char* variant_a, double ms_a,
         const char* variant_b, double ms_b) {
  std::printf("%-34s  %-14s %9.2f ms   %-14s %9.2f ms   x%.2f\n", task,
              variant_a, ms_a, variant_b, ms_b, ms_a / ms_b);
}

}  // namespace

int main() {
  std::printf("kernel benchmarks (single run each; ratios are A/B)\n\n");

  // --- pointwise hypothesis scan: exact rationals vs 128-bit integers ------
  {
    const auto inst = seq::random_feasible_instance(40, 7);
    seq::ScanOptions exact{Exec::Serial, seq::ScanBackend::Exact};
    seq::ScanOptions fixed{Exec::Serial, seq::ScanBackend::Int128};
    const double a = time_ms([&] { seq::check_triple_hypothesis(inst, exact); });
    const double b = time_ms([&] { seq::check_triple_hypothesis(inst, fixed); });
    row("hypothesis scan n=40", "exact", a, "int128", b);
  }

  // --- pointwise hypothesis scan: serial vs parallel -----------------------
  {
    const auto inst = seq::random_feasible_instance(40, 7);
    seq::ScanOptions ser{Exec::Serial, seq::ScanBackend::Int128};
    seq::ScanOptions par{Exec::Parallel, seq::ScanBackend::Int128};
    const double a = time_ms([&] { seq::check_triple_hypothesis(inst, ser); },
                             3);
    const double b = time_ms([&] { seq::check_triple_hypothesis(inst, par); },
                             3);
    row("hypothesis scan n=40", "serial", a, "parallel", b);
  }

  // --- triple sumset: cubic loop vs rotate-or ------------------------------
  {
    std::mt19937_64 rng(3);
    const std::int64_t m = 2'001;
    std::vector<std::int64_t> mem;
    for (std::int64_t r = 0; r < m; ++r) {
      if (rng() % 4 == 0) mem.push_back(r);
    }
    const auto s = mod::ResidueSet::from_members(m, mem);
    const double a = time_ms([&] { mod::sumset3_brute(s, s, s); });
    const double b = time_ms([&] { mod::sumset3(s, s, s); }, 10);
    row("triple sumset m=2001", "cubic", a, "rotate-or", b);
  }

  // --- prime sieve: serial vs segmented-parallel ---------------------------
  {
    const double a =
        time_ms([&] { primes::sieve(20'000'000, {Exec::Serial}); });
    const double b =
        time_ms([&] { primes::sieve(20'000'000, {Exec::Parallel}); });
    row("sieve to 2e7", "serial", a, "parallel", b);
  }

  // --- integer convolution: schoolbook vs transform ------------------------
  {
    std::mt19937_64 rng(5);
    std::vector<std::int64_t> u(4'096), v(4'096);
    for (auto& x : u) x = static_cast<std::int64_t>(rng() % 1'000);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 1'000);
    const double a = time_ms([&] { ntt::convolve_schoolbook(u, v); });
    const double b = time_ms([&] { ntt::convolve(u, v); }, 5);
    row("convolution len 4096", "schoolbook", a, "transform", b);
  }

  // --- discrete transform: direct vs chirp ---------------------------------
  {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> f(2'039);
    for (auto& x : f) x = dist(rng);
    const double a = time_ms([&] { fourier::dft_direct(f); });
    const double b = time_ms([&] { fourier::dft_fast(f); }, 5);
    row("transform N=2039", "direct", a, "chirp", b);
  }

  // --- witness scan: serial vs parallel ------------------------------------
  {
    const auto modulus = mod::analyze_modulus(1'001);  // 7 * 11 * 13
    std::mt19937_64 rng(9);
    std::array<unitfn::UnitFunction, 3> f;
    for (auto& fi : f) {
      fi = unitfn::UnitFunction(modulus, Rat(0));
      for (std::int64_t u : fi.unit_list()) {
        fi.set_value(u, Rat(48 + static_cast<std::int64_t>(rng() % 17), 64));
      }
    }
    const auto params = dens::ThresholdParams::create(Rat(1, 10), Rat(1, 26));
    dens::WitnessOptions ser{Exec::Serial};
    dens::WitnessOptions par{Exec::Parallel};
    const double a = time_ms([&] {
      dens::find_margin_witness(f[0], f[1], f[2], params, 1,
                                dens::WitnessMode::Brute, ser);
    });
    const double b = time_ms([&] {
      dens::find_margin_witness(f[0], f[1], f[2], params, 1,
                                dens::WitnessMode::Brute, par);
    });
    row("witness scan m=1001", "serial", a, "parallel", b);
  }

  // --- counterexample search throughput ------------------------------------
  {
    seq::SearchConfig cfg;
    cfg.n = 6;
    cfg.steps = 200'000;
    cfg.seed = 1;
    const double a = time_ms([&] { seq::search_counterexample(cfg); });
    std::printf("%-34s  %-14s %9.2f ms   (%.0f proposals/s)\n",
                "search 2e5 proposals n=6", "single run", a,
                200'000.0 / (a / 1000.0));
  }

  return 0;
}
