#pragma once

#include <cstdint>
#include <vector>

#include "terngold/exec.hpp"

namespace terngold::primes {

struct SieveOptions {
  Exec exec = Exec::Parallel;
  std::int64_t cap = 100'000'000;  // memory guard for the bit table
};

// Bit-packed primality table over [0, limit], immutable once built, with
// O(1) prime-counting queries via per-word prefix counts.
class PrimeTable {
 public:
  PrimeTable() = default;

  std::int64_t limit() const { return limit_; }
  bool is_prime(std::int64_t x) const;
  // Number of primes <= x; x may exceed the limit only by being negative-
  // trivial (x < 2 gives 0); otherwise x <= limit is required.
  std::int64_t pi(std::int64_t x) const;
  std::vector<std::int64_t> primes_upto(std::int64_t x) const;
  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  friend PrimeTable sieve(std::int64_t n, const SieveOptions& opt);
  std::int64_t limit_ = -1;
  std::vector<std::uint64_t> bits_;    // bit i set iff i is prime
  std::vector<std::int64_t> prefix_;   // primes among bits [0, 64*w)
};

// Sieve of Eratosthenes up to n (inclusive).  The parallel form marks
// composites segment-by-segment from a serially built base table; both
// forms produce identical bits.
PrimeTable sieve(std::int64_t n, const SieveOptions& opt = {});

}  // namespace terngold::primes
