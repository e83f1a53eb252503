#include "terngold/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "terngold/isotonic.hpp"

namespace terngold::seq {

namespace {

// Uniform in [0,1) from the raw 64-bit stream; bit-for-bit reproducible
// across platforms, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

double objective(const std::array<std::vector<double>, 3>& s, int n) {
  double sums[3] = {0, 0, 0};
  for (int q = 0; q < 3; ++q) {
    for (double v : s[q]) sums[q] += v;
  }
  double a = sums[0] / n, b = sums[1] / n, c = sums[2] / n;
  return a * b + b * c + c * a - 0.625 * (a + b + c);
}

// Pointwise bound in doubles with a forgiving tolerance; the exact rescale at
// the end of a run is what actually decides feasibility.
bool feasible(const std::array<std::vector<double>, 3>& s, int n) {
  const std::vector<double>&a = s[0], &b = s[1], &c = s[2];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int kmin = std::max(0, n - i - j);
      for (int k = kmin; k < n; ++k) {
        double lhs = a[i] * b[j] + b[j] * c[k] + c[k] * a[i];
        double rhs = 0.625 * (a[i] + b[j] + c[k]);
        if (lhs > rhs + 1e-12) return false;
      }
    }
  }
  return true;
}

struct RestartOutcome {
  TripleSequences best;
  Rat margin;
  std::uint64_t accepted = 0;
};

TripleSequences exactify(const std::array<std::vector<double>, 3>& s) {
  auto lift = [](const std::vector<double>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(rational_from_double(x));
    return out;
  };
  TripleSequences raw =
      TripleSequences::create(lift(s[0]), lift(s[1]), lift(s[2]));
  return scale_instance(raw, feasibility_scale(raw));
}

RestartOutcome run_restart(const SearchConfig& cfg, int restart) {
  const int n = cfg.n;
  std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
  const double amp0 = rational_to_double(cfg.step_scale);

  TripleSequences start =
      random_feasible_instance(n, cfg.seed + 0x9e3779b97f4a7c15ULL + restart);
  std::array<std::vector<double>, 3> cur;
  for (int q = 0; q < 3; ++q) {
    const std::vector<Rat>& src = q == 0 ? start.a : q == 1 ? start.b : start.c;
    cur[q].reserve(n);
    for (const Rat& r : src) cur[q].push_back(rational_to_double(r));
  }

  double cur_obj = objective(cur, n);
  auto best = cur;
  double best_obj = cur_obj;
  std::uint64_t accepted = 0;

  for (std::uint64_t step = 0; step < cfg.steps; ++step) {
    double progress = static_cast<double>(step) / cfg.steps;
    double amp = amp0 * (1.0 - 0.9 * progress);
    double temperature = 1e-3 * amp0 * (1.0 - progress) + 1e-12;

    int which = static_cast<int>(rng() % 3);
    int idx = static_cast<int>(rng() % n);
    double delta = (2.0 * uniform01(rng) - 1.0) * amp;

    std::vector<double> proposal = cur[which];
    proposal[idx] += delta;
    proposal = project_nonincreasing_clamped(proposal);

    std::array<std::vector<double>, 3> cand = cur;
    cand[which] = std::move(proposal);
    if (!feasible(cand, n)) continue;

    double cand_obj = objective(cand, n);
    if (cand_obj >= cur_obj - temperature) {
      cur = std::move(cand);
      cur_obj = cand_obj;
      ++accepted;
      if (cur_obj > best_obj) {
        best = cur;
        best_obj = cur_obj;
      }
    }
  }

  RestartOutcome out;
  out.best = exactify(best);
  out.margin = -check_average_bound(out.best).margin;
  out.accepted = accepted;
  return out;
}

}  // namespace

SearchResult search_counterexample(const SearchConfig& cfg) {
  if (cfg.steps < 1 || cfg.restarts < 1) {
    throw std::invalid_argument("search needs steps >= 1 and restarts >= 1");
  }
  if (cfg.step_scale <= 0 || cfg.step_scale > 1) {
    throw std::invalid_argument("step_scale must lie in (0, 1]");
  }

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  if (cfg.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < cfg.restarts; ++r) {
      outcomes[r] = run_restart(cfg, r);
    }
  } else {
    for (int r = 0; r < cfg.restarts; ++r) {
      outcomes[r] = run_restart(cfg, r);
    }
  }

  SearchResult res;
  int best_r = 0;
  for (int r = 1; r < cfg.restarts; ++r) {
    if (outcomes[r].margin > outcomes[best_r].margin) best_r = r;
  }
  res.best = std::move(outcomes[best_r].best);
  res.best_margin = std::move(outcomes[best_r].margin);
  res.best_restart = best_r;
  res.counterexample = res.best_margin > 0;
  res.steps_run = cfg.steps * static_cast<std::uint64_t>(cfg.restarts);
  for (const RestartOutcome& o : outcomes) res.accepted += o.accepted;
  return res;
}

TripleSequences random_feasible_instance(int n, std::uint64_t seed,
                                         int max_den) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("instance length must be even and >= 2");
  }
  if (max_den < 8) {
    throw std::invalid_argument("max_den must be >= 8");
  }
  std::mt19937_64 rng(seed);
  int family = static_cast<int>(rng() % 4);

  auto draw_sequence = [&]() {
    std::vector<Rat> v(n);
    switch (family) {
      case 1: {  // near-constant around 5/8, where the bound saturates
        std::int64_t q = 8 * (1 + static_cast<std::int64_t>(
                                      rng() % (max_den / 8)));
        std::int64_t base = 5 * q / 8;
        std::int64_t spread = std::max<std::int64_t>(1, q / 8);
        for (int i = 0; i < n; ++i) {
          std::int64_t num = base + static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
          num = std::clamp<std::int64_t>(num, 0, q);
          v[i] = Rat(num, q);
          v[i].canonicalize();
        }
        break;
      }
      case 2: {  // step: a high plateau followed by a low one
        std::int64_t q = 1 + static_cast<std::int64_t>(rng() % max_den);
        std::int64_t hi = static_cast<std::int64_t>(rng() % (q + 1));
        std::int64_t lo = static_cast<std::int64_t>(rng() % (hi + 1));
        int split = 1 + static_cast<int>(rng() % (n - 1));
        for (int i = 0; i < n; ++i) {
          v[i] = Rat(i < split ? hi : lo, q);
          v[i].canonicalize();
        }
        break;
      }
      case 3: {  // heavy ties from a tiny value alphabet
        std::int64_t q = 1 + static_cast<std::int64_t>(rng() % max_den);
        std::int64_t levels[3] = {
            static_cast<std::int64_t>(rng() % (q + 1)),
            static_cast<std::int64_t>(rng() % (q + 1)),
            static_cast<std::int64_t>(rng() % (q + 1))};
        for (int i = 0; i < n; ++i) {
          v[i] = Rat(levels[rng() % 3], q);
          v[i].canonicalize();
        }
        break;
      }
      default: {  // uniform numerators
        std::int64_t q = 1 + static_cast<std::int64_t>(rng() % max_den);
        for (int i = 0; i < n; ++i) {
          v[i] = Rat(static_cast<std::int64_t>(rng() % (q + 1)), q);
          v[i].canonicalize();
        }
        break;
      }
    }
    std::sort(v.begin(), v.end(), [](const Rat& p, const Rat& q) {
      return p > q;
    });
    return v;
  };

  TripleSequences raw = TripleSequences::create(
      draw_sequence(), draw_sequence(), draw_sequence());
  Rat scale = feasibility_scale(raw);

  bool boundary = (rng() & 1) != 0;
  if (!boundary) {
    // Interior point: round t*k/1024 down to a denominator-2^20 dyadic so the
    // scaled entries keep small denominators (fast-kernel friendly).
    std::uint64_t k = 1 + rng() % 1024;
    mpz_class num = scale.get_num() * static_cast<unsigned long>(k) * 1024;
    mpz_class floor_num = num / scale.get_den();
    Rat dyadic(floor_num, mpz_class(1) << 20);
    dyadic.canonicalize();
    if (dyadic > 0) scale = dyadic;
  }
  return scale_instance(raw, scale);
}

}  // namespace terngold::seq
