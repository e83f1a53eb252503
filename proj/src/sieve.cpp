#include "terngold/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace terngold::primes {

namespace {

constexpr std::int64_t kSegmentWords = 1 << 13;  // 2^19 numbers per segment

void clear_bit(std::vector<std::uint64_t>& bits, std::int64_t i) {
  bits[static_cast<std::size_t>(i >> 6)] &=
      ~(std::uint64_t{1} << (i & 63));
}

// Strike multiples of the base primes inside the word range [w0, w1).
void mark_segment(std::vector<std::uint64_t>& bits,
                  const std::vector<std::int64_t>& base, std::int64_t w0,
                  std::int64_t w1, std::int64_t limit) {
  const std::int64_t lo = w0 * 64;
  const std::int64_t hi = std::min(w1 * 64 - 1, limit);
  for (std::int64_t p : base) {
    if (p * p > hi) break;
    std::int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
    for (std::int64_t q = start; q <= hi; q += p) {
      clear_bit(bits, q);
    }
  }
}

}  // namespace

bool PrimeTable::is_prime(std::int64_t x) const {
  if (x < 2) return false;
  if (x > limit_) {
    throw std::out_of_range("primality query " + std::to_string(x) +
                            " beyond table limit " + std::to_string(limit_));
  }
  return (bits_[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1;
}

std::int64_t PrimeTable::pi(std::int64_t x) const {
  if (x < 2) return 0;
  if (x > limit_) {
    throw std::out_of_range("prime-count query " + std::to_string(x) +
                            " beyond table limit " + std::to_string(limit_));
  }
  const std::int64_t w = x >> 6;
  const std::uint64_t mask =
      (x & 63) == 63 ? ~std::uint64_t{0}
                     : ((std::uint64_t{1} << ((x & 63) + 1)) - 1);
  return prefix_[static_cast<std::size_t>(w)] +
         std::popcount(bits_[static_cast<std::size_t>(w)] & mask);
}

std::vector<std::int64_t> PrimeTable::primes_upto(std::int64_t x) const {
  std::vector<std::int64_t> out;
  if (x < 2) return out;
  out.reserve(static_cast<std::size_t>(pi(x)));
  for (std::int64_t i = 2; i <= x; ++i) {
    if ((bits_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1) {
      out.push_back(i);
    }
  }
  return out;
}

PrimeTable sieve(std::int64_t n, const SieveOptions& opt) {
  if (n < 2) {
    throw std::invalid_argument("sieve limit must be at least 2, got " +
                                std::to_string(n));
  }
  if (n > opt.cap) {
    throw std::invalid_argument("sieve limit " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(opt.cap));
  }
  PrimeTable t;
  t.limit_ = n;
  const std::int64_t words = (n >> 6) + 1;
  t.bits_.assign(static_cast<std::size_t>(words), ~std::uint64_t{0});
  // trim bits beyond n and the non-primes 0, 1
  t.bits_.back() >>= 63 - (n & 63);
  t.bits_[0] &= ~std::uint64_t{3};

  if (opt.exec == Exec::Serial || n < 64 * kSegmentWords) {
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if ((t.bits_[static_cast<std::size_t>(p >> 6)] >> (p & 63)) & 1) {
        for (std::int64_t q = p * p; q <= n; q += p) clear_bit(t.bits_, q);
      }
    }
  } else {
    const std::int64_t root = static_cast<std::int64_t>(std::sqrt(
                                  static_cast<double>(n))) +
                              2;
    PrimeTable base = sieve(std::min(root, n),
                            SieveOptions{Exec::Serial, opt.cap});
    const std::vector<std::int64_t> base_primes = base.primes_upto(root);
    const std::int64_t segments = (words + kSegmentWords - 1) / kSegmentWords;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < segments; ++s) {
      mark_segment(t.bits_, base_primes, s * kSegmentWords,
                   std::min(words, (s + 1) * kSegmentWords), n);
    }
  }

  t.prefix_.resize(static_cast<std::size_t>(words));
  std::int64_t acc = 0;
  for (std::int64_t w = 0; w < words; ++w) {
    t.prefix_[static_cast<std::size_t>(w)] = acc;
    acc += std::popcount(t.bits_[static_cast<std::size_t>(w)]);
  }
  return t;
}

}  // namespace terngold::primes
