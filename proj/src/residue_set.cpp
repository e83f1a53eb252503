#include "terngold/residue_set.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace terngold::mod {

namespace {

std::int64_t word_count(std::int64_t m) { return (m + 63) / 64; }

void check_modulus_match(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("residue sets have different moduli");
  }
}

// OR `count` bits of src starting at bit src_off into dst at bit dst_off.
void or_bits(std::vector<std::uint64_t>& dst,
             const std::vector<std::uint64_t>& src, std::int64_t src_off,
             std::int64_t dst_off, std::int64_t count) {
  std::int64_t done = 0;
  while (done < count) {
    std::int64_t s = src_off + done, d = dst_off + done;
    int sb = static_cast<int>(s & 63), db = static_cast<int>(d & 63);
    std::int64_t take = std::min<std::int64_t>(
        {64 - sb, 64 - db, count - done});
    std::uint64_t chunk = src[s >> 6] >> sb;
    if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
    dst[d >> 6] |= chunk << db;
    done += take;
  }
}

// OR a copy of src rotated by shift (index r -> r+shift mod m) into dst.
void rotate_or_into(std::vector<std::uint64_t>& dst,
                    const std::vector<std::uint64_t>& src, std::int64_t shift,
                    std::int64_t m) {
  or_bits(dst, src, 0, shift, m - shift);
  or_bits(dst, src, m - shift, 0, shift);
}

std::int64_t popcount_words(const std::vector<std::uint64_t>& words) {
  std::int64_t n = 0;
  for (std::uint64_t w : words) n += std::popcount(w);
  return n;
}

}  // namespace

ResidueSet::ResidueSet(std::int64_t m) : m_(m), words_(word_count(m), 0) {
  if (m < 1) throw std::invalid_argument("residue-set modulus must be >= 1");
}

ResidueSet ResidueSet::from_members(std::int64_t m,
                                    std::span<const std::int64_t> members) {
  ResidueSet s(m);
  for (std::int64_t r : members) s.insert(r);
  return s;
}

ResidueSet ResidueSet::full(std::int64_t m) {
  ResidueSet s(m);
  for (std::int64_t w = 0; w < static_cast<std::int64_t>(s.words_.size());
       ++w) {
    s.words_[w] = ~std::uint64_t{0};
  }
  int spare = static_cast<int>(s.words_.size() * 64 - m);
  if (spare > 0) s.words_.back() >>= spare;
  s.count_ = m;
  return s;
}

bool ResidueSet::test(std::int64_t r) const {
  if (r < 0 || r >= m_) {
    throw std::out_of_range("residue index outside [0, m)");
  }
  return (words_[r >> 6] >> (r & 63)) & 1;
}

void ResidueSet::insert(std::int64_t r) {
  if (r < 0 || r >= m_) {
    throw std::out_of_range("residue index outside [0, m)");
  }
  std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (!(words_[r >> 6] & bit)) {
    words_[r >> 6] |= bit;
    ++count_;
  }
}

void ResidueSet::erase(std::int64_t r) {
  if (r < 0 || r >= m_) {
    throw std::out_of_range("residue index outside [0, m)");
  }
  std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (words_[r >> 6] & bit) {
    words_[r >> 6] &= ~bit;
    --count_;
  }
}

std::vector<std::int64_t> ResidueSet::members() const {
  std::vector<std::int64_t> out;
  out.reserve(count_);
  for (std::int64_t w = 0; w < static_cast<std::int64_t>(words_.size()); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  check_modulus_match(*this, other);
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

ResidueSet units(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  ResidueSet s(m);
  if (m == 1) {
    s.insert(0);
    return s;
  }
  for (std::int64_t x = 0; x < m; ++x) {
    if (std::gcd(x, m) == 1) s.insert(x);
  }
  return s;
}

ResidueSet complement(const ResidueSet& s) {
  ResidueSet out = ResidueSet::full(s.modulus());
  for (std::int64_t r : s.members()) out.erase(r);
  return out;
}

ResidueSet translate(const ResidueSet& s, std::int64_t t) {
  std::int64_t m = s.modulus();
  t %= m;
  if (t < 0) t += m;
  ResidueSet out(m);
  std::vector<std::uint64_t> words(word_count(m), 0);
  rotate_or_into(words, s.words(), t, m);
  for (std::int64_t w = 0; w < static_cast<std::int64_t>(words.size()); ++w) {
    for (std::uint64_t bits = words[w]; bits; bits &= bits - 1) {
      out.insert(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

namespace {

std::vector<std::uint64_t> sumset_pair_words(
    const std::vector<std::uint64_t>& a_words,
    const std::vector<std::int64_t>& b_members, std::int64_t m, Exec exec) {
  std::vector<std::uint64_t> result(word_count(m), 0);
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(result.size(), 0);
#pragma omp for schedule(static)
      for (std::int64_t i = 0;
           i < static_cast<std::int64_t>(b_members.size()); ++i) {
        rotate_or_into(local, a_words, b_members[i], m);
      }
#pragma omp critical
      {
        for (size_t w = 0; w < result.size(); ++w) result[w] |= local[w];
      }
    }
  } else {
    for (std::int64_t s : b_members) rotate_or_into(result, a_words, s, m);
  }
  return result;
}

ResidueSet set_from_words(std::int64_t m, std::vector<std::uint64_t> words) {
  ResidueSet out(m);
  for (std::int64_t w = 0; w < static_cast<std::int64_t>(words.size()); ++w) {
    for (std::uint64_t bits = words[w]; bits; bits &= bits - 1) {
      out.insert(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

}  // namespace

ResidueSet sumset_pair(const ResidueSet& a, const ResidueSet& b, Exec exec) {
  check_modulus_match(a, b);
  std::int64_t m = a.modulus();
  // Rotating the smaller member list over the other set is cheaper.
  const ResidueSet& rotated = a.cardinality() <= b.cardinality() ? b : a;
  const ResidueSet& listed = a.cardinality() <= b.cardinality() ? a : b;
  return set_from_words(
      m, sumset_pair_words(rotated.words(), listed.members(), m, exec));
}

ResidueSet sumset3(const ResidueSet& a, const ResidueSet& b,
                   const ResidueSet& c, Exec exec) {
  return sumset_pair(sumset_pair(a, b, exec), c, exec);
}

ResidueSet sumset3_brute(const ResidueSet& a, const ResidueSet& b,
                         const ResidueSet& c) {
  check_modulus_match(a, b);
  check_modulus_match(a, c);
  std::int64_t m = a.modulus();
  ResidueSet out(m);
  for (std::int64_t x : a.members()) {
    for (std::int64_t y : b.members()) {
      for (std::int64_t z : c.members()) {
        out.insert((x + y + z) % m);
      }
    }
  }
  return out;
}

CrtGrid crt_split_set(const ResidueSet& s, std::int64_t m1, std::int64_t m2) {
  if (m1 * m2 != s.modulus()) {
    throw std::invalid_argument("CRT split does not match the set modulus");
  }
  CrtGrid grid;
  grid.crt = make_crt(m1, m2);
  grid.cells.assign(m1 * m2, 0);
  for (std::int64_t x : s.members()) {
    auto [u, v] = grid.crt.split(x);
    grid.cells[u * m2 + v] = 1;
  }
  return grid;
}

ResidueSet crt_join_set(const CrtGrid& grid) {
  ResidueSet out(grid.crt.m);
  for (std::int64_t u = 0; u < grid.crt.m1; ++u) {
    for (std::int64_t v = 0; v < grid.crt.m2; ++v) {
      if (grid.cells[u * grid.crt.m2 + v]) out.insert(grid.crt.join(u, v));
    }
  }
  return out;
}

CdReport cauchy_davenport_check(std::int64_t p, const ResidueSet& a,
                                const ResidueSet& b, const ResidueSet& c) {
  if (!is_prime(p)) {
    throw std::invalid_argument(
        "the sumset lower bound is only claimed for prime moduli");
  }
  if (a.modulus() != p || b.modulus() != p || c.modulus() != p) {
    throw std::invalid_argument("set modulus differs from p");
  }
  if (a.empty() || b.empty() || c.empty()) {
    throw std::invalid_argument("sets must be nonempty");
  }
  CdReport rep;
  rep.bound = std::min<std::int64_t>(
      a.cardinality() + b.cardinality() + c.cardinality() - 2, p);
  rep.actual = sumset3(a, b, c, Exec::Serial).cardinality();
  rep.holds = rep.actual >= rep.bound;
  return rep;
}

// --- covering ----------------------------------------------------------------

namespace {

// Packed single-word subsets for moduli up to 63 (the exhaustive regime).
std::uint64_t mask_rotate(std::uint64_t x, std::int64_t s, std::int64_t m) {
  if (s == 0) return x;
  std::uint64_t full = (std::uint64_t{1} << m) - 1;
  return ((x << s) | (x >> (m - s))) & full;
}

std::uint64_t mask_sumset_pair(std::uint64_t a, std::uint64_t b,
                               std::int64_t m) {
  std::uint64_t out = 0;
  while (b) {
    int s = std::countr_zero(b);
    b &= b - 1;
    out |= mask_rotate(a, s, m);
  }
  return out;
}

std::uint64_t mask_from_set(const ResidueSet& s) {
  std::uint64_t out = 0;
  for (std::int64_t r : s.members()) out |= std::uint64_t{1} << r;
  return out;
}

ResidueSet set_from_mask(std::int64_t m, std::uint64_t mask) {
  ResidueSet out(m);
  while (mask) {
    int r = std::countr_zero(mask);
    mask &= mask - 1;
    out.insert(r);
  }
  return out;
}

std::vector<std::int64_t> missing_of_mask(std::int64_t m, std::uint64_t sum) {
  std::vector<std::int64_t> missing;
  for (std::int64_t r = 0; r < m; ++r) {
    if (!((sum >> r) & 1)) missing.push_back(r);
  }
  return missing;
}

// Smallest cardinality passing the strict threshold 8|A| > 5φ.
std::int64_t strict_need(std::int64_t phi) { return (5 * phi) / 8 + 1; }
// Smallest cardinality passing the non-strict threshold 8|A| >= 5φ.
std::int64_t weak_need(std::int64_t phi) { return (5 * phi + 7) / 8; }

CoverReport cover_single(const Modulus& modulus,
                         const std::array<ResidueSet, 3>& sets,
                         const CoverConfig& cfg) {
  CoverReport rep;
  ResidueSet unit_set = units(modulus.m);
  const char* names[3] = {"A1", "A2", "A3"};
  for (int i = 0; i < 3; ++i) {
    if (sets[i].modulus() != modulus.m) {
      throw std::invalid_argument("set modulus differs from m");
    }
    if (!sets[i].is_subset_of(unit_set)) {
      throw std::invalid_argument(std::string(names[i]) +
                                  " is not a subset of the units");
    }
  }
  if (8 * sets[0].cardinality() <= 5 * modulus.phi) {
    rep.precondition_ok = false;
    rep.precondition_detail =
        "|A1| = " + std::to_string(sets[0].cardinality()) +
        " fails 8|A1| > 5*phi = " + std::to_string(5 * modulus.phi);
  }
  for (int i = 1; i < 3; ++i) {
    if (rep.precondition_ok && 8 * sets[i].cardinality() < 5 * modulus.phi) {
      rep.precondition_ok = false;
      rep.precondition_detail =
          std::string("|") + names[i] + "| = " +
          std::to_string(sets[i].cardinality()) + " fails 8|" + names[i] +
          "| >= 5*phi = " + std::to_string(5 * modulus.phi);
    }
  }
  if (!rep.precondition_ok && !cfg.diagnostic) return rep;

  rep.checked = 1;
  ResidueSet sum = sumset3(sets[0], sets[1], sets[2], cfg.exec);
  if (sum.cardinality() != modulus.m) {
    rep.failures = 1;
    rep.all_cover = false;
    rep.witness = CoverFailure{sets[0], sets[1], sets[2],
                               complement(sum).members()};
  }
  return rep;
}

CoverReport cover_exhaustive(const Modulus& modulus, const CoverConfig& cfg) {
  if (modulus.phi > 10) {
    throw std::invalid_argument(
        "exhaustive mode is capped at phi(m) <= 10; use random/adversarial");
  }
  if (modulus.m > 63) {
    throw std::invalid_argument("exhaustive mode requires m <= 63");
  }
  const std::int64_t m = modulus.m, phi = modulus.phi;
  std::vector<std::int64_t> unit_list = units(m).members();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::int64_t need1 = strict_need(phi), need23 = weak_need(phi);

  std::vector<std::uint64_t> adm1, adm23;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << phi); ++pick) {
    int size = std::popcount(pick);
    if (size < need23 && size < need1) continue;
    std::uint64_t residues = 0;
    for (std::uint64_t bits = pick; bits; bits &= bits - 1) {
      residues |= std::uint64_t{1} << unit_list[std::countr_zero(bits)];
    }
    if (size >= need1) adm1.push_back(residues);
    if (size >= need23) adm23.push_back(residues);
  }

  CoverReport rep;
  rep.checked = static_cast<std::int64_t>(adm1.size()) *
                static_cast<std::int64_t>(adm23.size()) *
                static_cast<std::int64_t>(adm23.size());

  std::int64_t failures = 0;
  const std::int64_t n1 = adm1.size(), n23 = adm23.size();
  // Index of the first failing triple in enumeration order (deterministic
  // across schedules); rep.checked doubles as the "none" sentinel.
  std::int64_t first_fail = rep.checked;

#pragma omp parallel for schedule(dynamic) reduction(+ : failures) \
    reduction(min : first_fail) if (cfg.exec == Exec::Parallel)
  for (std::int64_t i1 = 0; i1 < n1; ++i1) {
    for (std::int64_t i2 = 0; i2 < n23; ++i2) {
      std::uint64_t pair = mask_sumset_pair(adm1[i1], adm23[i2], m);
      for (std::int64_t i3 = 0; i3 < n23; ++i3) {
        if (mask_sumset_pair(pair, adm23[i3], m) != full) {
          ++failures;
          std::int64_t idx = (i1 * n23 + i2) * n23 + i3;
          if (idx < first_fail) first_fail = idx;
        }
      }
    }
  }

  rep.failures = failures;
  rep.all_cover = failures == 0;
  if (first_fail < rep.checked) {
    std::int64_t i3 = first_fail % n23, i2 = (first_fail / n23) % n23,
                 i1 = first_fail / (n23 * n23);
    std::uint64_t sum = mask_sumset_pair(
        mask_sumset_pair(adm1[i1], adm23[i2], m), adm23[i3], m);
    rep.witness = CoverFailure{set_from_mask(m, adm1[i1]),
                               set_from_mask(m, adm23[i2]),
                               set_from_mask(m, adm23[i3]),
                               missing_of_mask(m, sum)};
  }
  return rep;
}

// Draw a uniformly random subset of `source` with exactly `size` elements.
ResidueSet random_subset(std::vector<std::int64_t> source, std::int64_t size,
                         std::int64_t m, std::mt19937_64& rng) {
  for (std::int64_t i = 0; i < size; ++i) {
    std::int64_t j = i + static_cast<std::int64_t>(
                             rng() % (source.size() - i));
    std::swap(source[i], source[j]);
  }
  source.resize(size);
  return ResidueSet::from_members(m, source);
}

CoverReport cover_random(const Modulus& modulus, const CoverConfig& cfg) {
  CoverReport rep;
  std::vector<std::int64_t> unit_list = units(modulus.m).members();
  const std::int64_t phi = modulus.phi;
  std::int64_t need1 = strict_need(phi), need23 = weak_need(phi);
  if (need1 > phi) {
    throw std::invalid_argument("no admissible A1 exists at this modulus");
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    std::int64_t s1 = need1 + static_cast<std::int64_t>(
                                  rng() % (phi - need1 + 1));
    std::int64_t s2 = need23 + static_cast<std::int64_t>(
                                   rng() % (phi - need23 + 1));
    std::int64_t s3 = need23 + static_cast<std::int64_t>(
                                   rng() % (phi - need23 + 1));
    ResidueSet a1 = random_subset(unit_list, s1, modulus.m, rng);
    ResidueSet a2 = random_subset(unit_list, s2, modulus.m, rng);
    ResidueSet a3 = random_subset(unit_list, s3, modulus.m, rng);
    ResidueSet sum = sumset3(a1, a2, a3, cfg.exec);
    ++rep.checked;
    if (sum.cardinality() != modulus.m) {
      ++rep.failures;
      rep.all_cover = false;
      if (!rep.witness) {
        rep.witness = CoverFailure{a1, a2, a3, complement(sum).members()};
      }
    }
  }
  return rep;
}

CoverReport cover_adversarial(const Modulus& modulus, const CoverConfig& cfg) {
  CoverReport rep;
  std::vector<std::int64_t> unit_list = units(modulus.m).members();
  const std::int64_t phi = modulus.phi;
  std::int64_t need1 = strict_need(phi), need23 = weak_need(phi);
  if (need1 > phi) {
    throw std::invalid_argument("no admissible A1 exists at this modulus");
  }
  std::mt19937_64 rng(cfg.seed);

  // Coverage is monotone in the sets, so the adversary works at the minimum
  // admissible cardinalities and proposes member swaps that keep them fixed.
  std::array<ResidueSet, 3> sets = {
      random_subset(unit_list, need1, modulus.m, rng),
      random_subset(unit_list, need23, modulus.m, rng),
      random_subset(unit_list, need23, modulus.m, rng)};
  auto coverage = [&](const std::array<ResidueSet, 3>& s) {
    return sumset3(s[0], s[1], s[2], cfg.exec).cardinality();
  };
  std::int64_t cur = coverage(sets);
  std::array<ResidueSet, 3> worst = sets;
  std::int64_t worst_cover = cur;

  for (std::int64_t step = 0; step < cfg.budget; ++step) {
    int slot = static_cast<int>(rng() % 3);
    std::vector<std::int64_t> in = sets[slot].members();
    std::vector<std::int64_t> out;
    for (std::int64_t u : unit_list) {
      if (!sets[slot].test(u)) out.push_back(u);
    }
    if (out.empty()) break;  // the slot already holds every unit
    std::int64_t drop = in[rng() % in.size()];
    std::int64_t gain = out[rng() % out.size()];
    std::array<ResidueSet, 3> cand = sets;
    cand[slot].erase(drop);
    cand[slot].insert(gain);
    std::int64_t cov = coverage(cand);
    ++rep.checked;
    if (cov <= cur) {  // walk downhill and across plateaus
      sets = std::move(cand);
      cur = cov;
      if (cur < worst_cover) {
        worst = sets;
        worst_cover = cur;
      }
    }
  }

  rep.worst_cover_size = worst_cover;
  if (worst_cover != modulus.m) {
    rep.failures = 1;
    rep.all_cover = false;
    ResidueSet sum = sumset3(worst[0], worst[1], worst[2], cfg.exec);
    rep.witness =
        CoverFailure{worst[0], worst[1], worst[2], complement(sum).members()};
  }
  return rep;
}

}  // namespace

CoverReport verify_unit_cover(
    const Modulus& modulus,
    const std::optional<std::array<ResidueSet, 3>>& sets,
    const CoverConfig& cfg) {
  if (!modulus.squarefree_odd) {
    throw std::invalid_argument("covering requires a square-free odd modulus");
  }
  switch (cfg.mode) {
    case CoverMode::Single:
      if (!sets) {
        throw std::invalid_argument("single mode needs three explicit sets");
      }
      return cover_single(modulus, *sets, cfg);
    case CoverMode::Exhaustive:
      return cover_exhaustive(modulus, cfg);
    case CoverMode::Random:
      return cover_random(modulus, cfg);
    case CoverMode::Adversarial:
      return cover_adversarial(modulus, cfg);
  }
  throw std::logic_error("unknown cover mode");
}

SharpnessMod15 mod15_counterexample(Exec exec) {
  SharpnessMod15 out;
  const std::array<std::int64_t, 5> members = {1, 4, 7, 11, 13};
  out.s = ResidueSet::from_members(15, members);
  out.missing = complement(sumset3(out.s, out.s, out.s, exec));
  out.density = Rat(out.s.cardinality(), 8);  // φ(15) = 8
  out.density.canonicalize();
  return out;
}

}  // namespace terngold::mod
