#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "terngold/exec.hpp"
#include "terngold/sieve.hpp"
#include "terngold/subset_spec.hpp"

namespace terngold::count {

enum class CountMethod { Convolution, Brute };
const char* to_string(CountMethod m);

// r(n) = number of ordered triples (p1, p2, p3) in P1 x P2 x P3 with
// p1 + p2 + p3 = n; repetitions allowed.
struct SingleCount {
  std::int64_t n = 0;
  std::int64_t count = 0;
  CountMethod method = CountMethod::Convolution;
  double ms = 0;
};

struct RangeReport {
  std::int64_t n0 = 0, n1 = 0;
  std::vector<std::int64_t> counts;    // counts[i] = r(n0 + 2i)
  std::vector<std::int64_t> failures;  // odd n in range with r(n) = 0
  CountMethod method = CountMethod::Convolution;
  double ms = 0;
};

// Exact count for a single n >= 3 (any parity; even n is a legitimate
// diagnostic query).  The brute method is a triple loop over subset members
// and is capped at n <= 10^4; the convolution method pairs P1 and P2
// exactly and assembles against P3.
SingleCount count_representations(std::int64_t n,
                                  const std::array<primes::PrimeSubsetSpec, 3>& specs,
                                  const primes::PrimeTable& table,
                                  CountMethod method,
                                  Exec exec = Exec::Parallel);

// Counts for every odd n in [n0, n1]; bounds must be odd with
// 3 <= n0 <= n1 <= table limit.  The convolution method computes the full
// triple convolution once for the whole range.
RangeReport scan_odd_range(std::int64_t n0, std::int64_t n1,
                           const std::array<primes::PrimeSubsetSpec, 3>& specs,
                           const primes::PrimeTable& table, CountMethod method,
                           Exec exec = Exec::Parallel);

}  // namespace terngold::count
