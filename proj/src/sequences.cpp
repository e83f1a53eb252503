#include "terngold/sequences.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace terngold::seq {

namespace {

using I128 = __int128;

constexpr std::int64_t kDenCap = (1LL << 31) - 1;
constexpr std::int64_t kNumCap = (1LL << 33);

void validate_sequence(const std::vector<Rat>& v, int n, const char* label,
                       const Rat& lo, const Rat& hi) {
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument(std::string("sequence ") + label +
                                " length does not match n");
  }
  for (int i = 0; i < n; ++i) {
    if (v[i] < lo || v[i] > hi) {
      throw std::invalid_argument(std::string("sequence ") + label +
                                  " entry " + std::to_string(i) +
                                  " out of range");
    }
    if (i > 0 && v[i] > v[i - 1]) {
      throw std::invalid_argument(std::string("sequence ") + label +
                                  " increases at index " + std::to_string(i));
    }
  }
}

// Size of the scan domain {(i,j,k) : 0 <= i,j,k < n, i+j+k >= n}.
std::int64_t domain_size(int n) {
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      total += std::min<std::int64_t>(n, i + j);
    }
  }
  return total;
}

// Three rational sequences rewritten over one shared denominator.
struct IntView {
  std::vector<std::int64_t> a, b, c;
  std::int64_t den = 0;
};

std::optional<IntView> make_int_view(const std::vector<Rat>& a,
                                     const std::vector<Rat>& b,
                                     const std::vector<Rat>& c) {
  auto la = common_denominator(a, kDenCap);
  auto lb = common_denominator(b, kDenCap);
  auto lc = common_denominator(c, kDenCap);
  if (!la || !lb || !lc) return std::nullopt;
  std::int64_t l = std::lcm(*la, *lb);  // both <= 2^31, product fits int64
  if (l > kDenCap) return std::nullopt;
  l = std::lcm(l, *lc);
  if (l > kDenCap) return std::nullopt;
  auto na = scaled_numerators(a, l, kNumCap);
  auto nb = scaled_numerators(b, l, kNumCap);
  auto nc = scaled_numerators(c, l, kNumCap);
  if (!na || !nb || !nc) return std::nullopt;
  return IntView{std::move(*na), std::move(*nb), std::move(*nc), l};
}

enum class Space { A, X };  // original [0,1] bound vs transformed bound 3

// Exact sides of the pointwise inequality at one triple.
std::pair<Rat, Rat> exact_sides(const std::vector<Rat>& a,
                                const std::vector<Rat>& b,
                                const std::vector<Rat>& c, Space space, int i,
                                int j, int k) {
  Rat lhs = a[i] * b[j] + b[j] * c[k] + c[k] * a[i];
  Rat rhs = space == Space::A ? Rat(5, 8) * (a[i] + b[j] + c[k]) : Rat(3);
  return {lhs, rhs};
}

bool int_violates(const IntView& v, Space space, int i, int j, int k) {
  I128 prod = (I128)v.a[i] * v.b[j] + (I128)v.b[j] * v.c[k] +
              (I128)v.c[k] * v.a[i];
  if (space == Space::X) {
    return prod > (I128)3 * v.den * v.den;
  }
  I128 sum = (I128)v.a[i] + v.b[j] + v.c[k];
  return 8 * prod > (I128)5 * v.den * sum;
}

bool rat_violates(const std::vector<Rat>& a, const std::vector<Rat>& b,
                  const std::vector<Rat>& c, Space space, int i, int j,
                  int k) {
  auto [lhs, rhs] = exact_sides(a, b, c, space, i, j, k);
  return lhs > rhs;
}

// Lexicographic minimum over violating triples; (-1,_,_) means none.
struct BestTriple {
  int i = -1, j = 0, k = 0;
  bool better_than(const BestTriple& o) const {
    if (o.i < 0) return i >= 0;
    if (i < 0) return false;
    return std::array{i, j, k} < std::array{o.i, o.j, o.k};
  }
};

template <typename Violates>
BestTriple scan_serial(int n, Violates&& violates) {
  BestTriple best;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (best.i >= 0 && (i > best.i || (i == best.i && j > best.j))) continue;
      int kmin = std::max(0, n - i - j);
      for (int k = kmin; k < n; ++k) {
        if (violates(i, j, k)) {
          BestTriple cand{i, j, k};
          if (cand.better_than(best)) best = cand;
          break;  // larger k at this (i,j) cannot be lexicographically smaller
        }
      }
    }
  }
  return best;
}

template <typename Violates>
BestTriple scan_parallel(int n, Violates&& violates) {
  BestTriple best;
#pragma omp parallel
  {
    BestTriple local;
#pragma omp for collapse(2) schedule(static)
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int kmin = std::max(0, n - i - j);
        for (int k = kmin; k < n; ++k) {
          if (violates(i, j, k)) {
            BestTriple cand{i, j, k};
            if (cand.better_than(local)) local = cand;
            break;
          }
        }
      }
    }
#pragma omp critical
    {
      if (local.better_than(best)) best = local;
    }
  }
  return best;
}

HypothesisReport scan_hypothesis(const std::vector<Rat>& a,
                                 const std::vector<Rat>& b,
                                 const std::vector<Rat>& c, int n, Space space,
                                 const ScanOptions& opt) {
  std::optional<IntView> view;
  if (opt.backend != ScanBackend::Exact) {
    view = make_int_view(a, b, c);
    if (!view && opt.backend == ScanBackend::Int128) {
      throw std::invalid_argument(
          "instance does not fit the 128-bit scan backend");
    }
  }

  BestTriple best;
  if (view) {
    auto violates = [&](int i, int j, int k) {
      return int_violates(*view, space, i, j, k);
    };
    best = opt.exec == Exec::Serial ? scan_serial(n, violates)
                                    : scan_parallel(n, violates);
  } else {
    auto violates = [&](int i, int j, int k) {
      return rat_violates(a, b, c, space, i, j, k);
    };
    best = opt.exec == Exec::Serial ? scan_serial(n, violates)
                                    : scan_parallel(n, violates);
  }

  HypothesisReport rep;
  rep.scanned = domain_size(n);
  if (best.i >= 0) {
    rep.holds = false;
    auto [lhs, rhs] = exact_sides(a, b, c, space, best.i, best.j, best.k);
    rep.first_violation = Violation{best.i, best.j, best.k, lhs, rhs};
  }
  return rep;
}

}  // namespace

TripleSequences TripleSequences::create(std::vector<Rat> a, std::vector<Rat> b,
                                        std::vector<Rat> c) {
  int n = static_cast<int>(a.size());
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("sequence length must be even and >= 2");
  }
  validate_sequence(a, n, "a", Rat(0), Rat(1));
  validate_sequence(b, n, "b", Rat(0), Rat(1));
  validate_sequence(c, n, "c", Rat(0), Rat(1));
  TripleSequences s;
  s.n = n;
  s.a = std::move(a);
  s.b = std::move(b);
  s.c = std::move(c);
  return s;
}

TransformedSequences transform_to_xyz(const TripleSequences& s) {
  TransformedSequences t;
  t.n = s.n;
  t.m = s.n / 2;
  auto map = [](const std::vector<Rat>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(Rat(16, 5) * q - 1);
    return out;
  };
  t.x = map(s.a);
  t.y = map(s.b);
  t.z = map(s.c);
  return t;
}

TripleSequences inverse_transform(const TransformedSequences& t) {
  auto map = [](const std::vector<Rat>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(Rat(5, 16) * (q + 1));
    return out;
  };
  return TripleSequences::create(map(t.x), map(t.y), map(t.z));
}

HypothesisReport check_triple_hypothesis(const TripleSequences& s,
                                         const ScanOptions& opt) {
  return scan_hypothesis(s.a, s.b, s.c, s.n, Space::A, opt);
}

HypothesisReport check_transformed_hypothesis(const TransformedSequences& t,
                                              const ScanOptions& opt) {
  return scan_hypothesis(t.x, t.y, t.z, t.n, Space::X, opt);
}

AverageReport check_average_bound(const TripleSequences& s) {
  auto mean = [&](const std::vector<Rat>& v) {
    Rat sum(0);
    for (const Rat& q : v) sum += q;
    return Rat(sum / s.n);
  };
  AverageReport rep;
  rep.avg_a = mean(s.a);
  rep.avg_b = mean(s.b);
  rep.avg_c = mean(s.c);
  rep.margin = Rat(5, 8) * (rep.avg_a + rep.avg_b + rep.avg_c) -
               (rep.avg_a * rep.avg_b + rep.avg_b * rep.avg_c +
                rep.avg_c * rep.avg_a);
  rep.holds = rep.margin >= 0;
  return rep;
}

const char* to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::HypothesisFails:
      return "HYPOTHESIS_FAILS";
    case InstanceStatus::Confirmed:
      return "CONFIRMED";
    case InstanceStatus::Counterexample:
      return "COUNTEREXAMPLE";
  }
  return "UNKNOWN";
}

InstanceVerdict classify_instance(const TripleSequences& s,
                                  const ScanOptions& opt) {
  InstanceVerdict v;
  v.in_claimed_range = s.in_claimed_range();
  v.hypothesis = check_triple_hypothesis(s, opt);
  v.average = check_average_bound(s);
  if (!v.hypothesis.holds) {
    v.status = InstanceStatus::HypothesisFails;
  } else if (v.average.holds) {
    v.status = InstanceStatus::Confirmed;
  } else {
    v.status = InstanceStatus::Counterexample;
  }
  return v;
}

BlockQuantities compute_block_quantities(const TransformedSequences& t) {
  const int m = t.m;
  auto half = [&](const std::vector<Rat>& v, int begin, int end) {
    Rat sum(0);
    for (int i = begin; i < end; ++i) sum += v[i];
    return sum;
  };
  BlockQuantities q;
  q.x0 = half(t.x, 0, m);
  q.x1 = half(t.x, m, t.n);
  q.y0 = half(t.y, 0, m);
  q.y1 = half(t.y, m, t.n);
  q.z0 = half(t.z, 0, m);
  q.z1 = half(t.z, m, t.n);
  const Rat &xc = t.x[0], &yc = t.y[0], &zc = t.z[0];
  const Rat &xm = t.x[m], &ym = t.y[m], &zm = t.z[m];
  q.delta0 = xc * yc + yc * zc + zc * xc;
  q.delta_m = xm * ym + ym * zm + zm * xm;
  q.delta_m0 = xm * zc + ym * zc + ym * xc + zm * xc + xm * yc + zm * yc;
  q.r = xc + xm;
  q.s = yc + ym;
  q.t = zc + zm;
  q.u = q.r * q.s + q.s * q.t + q.t * q.r;
  q.e = xc + yc - 5 * (xm + ym);
  q.f = yc + zc - 5 * (ym + zm);
  q.g = zc + xc - 5 * (zm + xm);
  return q;
}

CertificateReport certificate_ledger(const TransformedSequences& t,
                                     bool assume_hypothesis,
                                     const ScanOptions& opt) {
  CertificateReport rep;
  rep.hypothesis_ok =
      assume_hypothesis || check_transformed_hypothesis(t, opt).holds;

  BlockQuantities q = compute_block_quantities(t);
  Rat m2 = Rat(t.m) * Rat(t.m);
  Rat tail = q.x1 * q.y1 + q.y1 * q.z1 + q.z1 * q.x1;
  Rat total = (q.x0 + q.x1) * (q.y0 + q.y1) + (q.y0 + q.y1) * (q.z0 + q.z1) +
              (q.z0 + q.z1) * (q.x0 + q.x1);

  auto add = [&](const char* name, bool applicable, Rat lhs, Rat rhs) {
    LedgerEntry e;
    e.name = name;
    e.applicable = rep.hypothesis_ok && applicable;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.holds = !e.applicable || e.lhs <= e.rhs;
    if (e.applicable && !e.holds) rep.all_applicable_hold = false;
    rep.entries.push_back(std::move(e));
  };

  add("average_product_corner_form", true, total,
      9 * (m2 - 1) + q.u - q.delta_m + tail);
  add("cross_corner_pairs", true, q.delta_m0, 9 - q.delta_m);
  add("average_product_center_form", true, total,
      9 * m2 + q.delta0 - q.delta_m + tail);
  add("tail_half_products", true, tail - q.delta_m, 3 * (m2 - 1));

  bool negative_pair = q.r + q.s < 0 || q.s + q.t < 0 || q.t + q.r < 0;
  add("negative_pair_sum_total", negative_pair, q.u, Rat(12));

  bool tails_paired = q.x1 + q.y1 >= 0 && q.y1 + q.z1 >= 0 && q.z1 + q.x1 >= 0;
  add("tail_vs_corner_products", tails_paired, tail, m2 * q.delta_m);

  int negative_efg = (q.e < 0) + (q.f < 0) + (q.g < 0);
  add("corner_energy_all_negative", tails_paired && negative_efg == 3,
      q.delta0 + 8 * q.delta_m, Rat(27));
  add("corner_energy_two_negative", tails_paired && negative_efg == 2,
      q.delta0 + 30 * q.delta_m, Rat(45));
  return rep;
}

Rat feasibility_scale(const TripleSequences& s) {
  const int n = s.n;
  auto view = make_int_view(s.a, s.b, s.c);
  if (view) {
    // Approximate pass in doubles, then exact comparison over the shortlist.
    // The shortlist window is far wider than double rounding error, so the
    // true minimizer cannot be missed.
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<I128, I128>> shortlist;  // (S*den, P) with P > 0
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int kmin = std::max(0, n - i - j);
        for (int k = kmin; k < n; ++k) {
          I128 p = (I128)view->a[i] * view->b[j] +
                   (I128)view->b[j] * view->c[k] +
                   (I128)view->c[k] * view->a[i];
          if (p <= 0) continue;
          I128 sden =
              (I128)(view->a[i] + view->b[j] + view->c[k]) * view->den;
          double cand = 0.625 * (double)sden / (double)p;
          if (cand < best * (1 - 1e-9)) {
            best = cand;
            shortlist.clear();
            shortlist.emplace_back(sden, p);
          } else if (cand <= best * (1 + 1e-9)) {
            shortlist.emplace_back(sden, p);
          }
        }
      }
    }
    if (shortlist.empty()) return Rat(1);
    Rat min_cand;
    bool first = true;
    for (auto& [sden, p] : shortlist) {
      Rat cand(5 * mpz_from_int128(sden), 8 * mpz_from_int128(p));
      cand.canonicalize();
      if (first || cand < min_cand) {
        min_cand = cand;
        first = false;
      }
    }
    return std::min(min_cand, Rat(1));
  }

  // Exact fallback.
  Rat min_cand(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int kmin = std::max(0, n - i - j);
      for (int k = kmin; k < n; ++k) {
        Rat p = s.a[i] * s.b[j] + s.b[j] * s.c[k] + s.c[k] * s.a[i];
        if (p <= 0) continue;
        Rat cand = Rat(5, 8) * (s.a[i] + s.b[j] + s.c[k]) / p;
        if (cand < min_cand) min_cand = cand;
      }
    }
  }
  return min_cand;
}

TripleSequences scale_instance(const TripleSequences& s, const Rat& u) {
  auto scale = [&](const std::vector<Rat>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(Rat(q * u));
    return out;
  };
  return TripleSequences::create(scale(s.a), scale(s.b), scale(s.c));
}

}  // namespace terngold::seq
