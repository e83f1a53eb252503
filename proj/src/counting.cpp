#include "terngold/counting.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>

#include "terngold/ntt.hpp"

namespace terngold::count {

namespace {

constexpr std::int64_t kBruteCap = 10'000;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool test_bit(const std::vector<std::uint64_t>& bits, std::int64_t i) {
  return (bits[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
}

std::vector<std::int64_t> bits_to_indicator(
    const std::vector<std::uint64_t>& bits, std::int64_t limit) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(limit + 1), 0);
  for (std::int64_t i = 0; i <= limit; ++i) {
    if (test_bit(bits, i)) v[static_cast<std::size_t>(i)] = 1;
  }
  return v;
}

std::vector<std::int64_t> bits_to_members(
    const std::vector<std::uint64_t>& bits) {
  std::vector<std::int64_t> out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t u = bits[w];
    while (u) {
      out.push_back(static_cast<std::int64_t>(w) * 64 +
                    std::countr_zero(u));
      u &= u - 1;
    }
  }
  return out;
}

// Triple loop over members of P1 and P2; the third coordinate is forced.
std::int64_t brute_count(std::int64_t n,
                         const std::vector<std::int64_t>& m1,
                         const std::vector<std::int64_t>& m2,
                         const std::vector<std::uint64_t>& bits3, Exec exec) {
  const std::int64_t sz1 = static_cast<std::int64_t>(m1.size());
  std::int64_t total = 0;
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < sz1; ++i) {
      const std::int64_t p1 = m1[static_cast<std::size_t>(i)];
      if (p1 + 4 > n) break;
      for (std::int64_t p2 : m2) {
        const std::int64_t p3 = n - p1 - p2;
        if (p3 < 2) break;
        if (test_bit(bits3, p3)) ++total;
      }
    }
    return total;
  }
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::int64_t i = 0; i < sz1; ++i) {
    const std::int64_t p1 = m1[static_cast<std::size_t>(i)];
    if (p1 + 4 > n) continue;
    for (std::int64_t p2 : m2) {
      const std::int64_t p3 = n - p1 - p2;
      if (p3 < 2) break;
      if (test_bit(bits3, p3)) ++total;
    }
  }
  return total;
}

}  // namespace

const char* to_string(CountMethod m) {
  return m == CountMethod::Convolution ? "convolution" : "brute";
}

SingleCount count_representations(
    std::int64_t n, const std::array<primes::PrimeSubsetSpec, 3>& specs,
    const primes::PrimeTable& table, CountMethod method, Exec exec) {
  if (n < 3) {
    throw std::invalid_argument("representation count needs n >= 3, got " +
                                std::to_string(n));
  }
  if (n > table.limit()) {
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds the sieve limit " +
                                std::to_string(table.limit()));
  }
  const auto t0 = std::chrono::steady_clock::now();
  SingleCount out;
  out.n = n;
  out.method = method;

  const auto bits1 = primes::membership_bits(specs[0], table, n);
  const auto bits2 = primes::membership_bits(specs[1], table, n);
  const auto bits3 = primes::membership_bits(specs[2], table, n);

  if (method == CountMethod::Brute) {
    if (n > kBruteCap) {
      throw std::invalid_argument("brute counting is capped at n <= " +
                                  std::to_string(kBruteCap));
    }
    out.count = brute_count(n, bits_to_members(bits1), bits_to_members(bits2),
                            bits3, exec);
  } else {
    const auto a1 = bits_to_indicator(bits1, n);
    const auto a2 = bits_to_indicator(bits2, n);
    const std::vector<std::int64_t> c12 = ntt::convolve(a1, a2);
    std::int64_t total = 0;
    for (std::int64_t p3 : bits_to_members(bits3)) {
      const std::int64_t s = n - p3;
      if (s >= 0 && s < static_cast<std::int64_t>(c12.size())) {
        total += c12[static_cast<std::size_t>(s)];
      }
    }
    out.count = total;
  }
  out.ms = elapsed_ms(t0);
  return out;
}

RangeReport scan_odd_range(std::int64_t n0, std::int64_t n1,
                           const std::array<primes::PrimeSubsetSpec, 3>& specs,
                           const primes::PrimeTable& table, CountMethod method,
                           Exec exec) {
  if (n0 % 2 == 0 || n1 % 2 == 0) {
    throw std::invalid_argument("scan bounds must be odd");
  }
  if (n0 < 3 || n0 > n1) {
    throw std::invalid_argument("scan needs 3 <= n0 <= n1");
  }
  if (n1 > table.limit()) {
    throw std::invalid_argument("scan bound " + std::to_string(n1) +
                                " exceeds the sieve limit " +
                                std::to_string(table.limit()));
  }
  const auto t0 = std::chrono::steady_clock::now();
  RangeReport rep;
  rep.n0 = n0;
  rep.n1 = n1;
  rep.method = method;
  const std::int64_t total = (n1 - n0) / 2 + 1;
  rep.counts.assign(static_cast<std::size_t>(total), 0);

  if (method == CountMethod::Convolution) {
    const auto a1 = bits_to_indicator(
        primes::membership_bits(specs[0], table, n1), n1);
    const auto a2 = bits_to_indicator(
        primes::membership_bits(specs[1], table, n1), n1);
    const auto a3 = bits_to_indicator(
        primes::membership_bits(specs[2], table, n1), n1);
    const std::vector<std::int64_t> c12 = ntt::convolve(a1, a2);
    const std::vector<std::int64_t> r = ntt::convolve(c12, a3);
    for (std::int64_t i = 0; i < total; ++i) {
      const std::int64_t n = n0 + 2 * i;
      if (n < static_cast<std::int64_t>(r.size())) {
        rep.counts[static_cast<std::size_t>(i)] =
            r[static_cast<std::size_t>(n)];
      }
    }
  } else {
    const auto bits1 = primes::membership_bits(specs[0], table, n1);
    const auto bits2 = primes::membership_bits(specs[1], table, n1);
    const auto bits3 = primes::membership_bits(specs[2], table, n1);
    const auto m1 = bits_to_members(bits1);
    const auto m2 = bits_to_members(bits2);
    if (n1 > kBruteCap) {
      throw std::invalid_argument("brute scanning is capped at n <= " +
                                  std::to_string(kBruteCap));
    }
    if (exec == Exec::Serial) {
      for (std::int64_t i = 0; i < total; ++i) {
        rep.counts[static_cast<std::size_t>(i)] =
            brute_count(n0 + 2 * i, m1, m2, bits3, Exec::Serial);
      }
    } else {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < total; ++i) {
        rep.counts[static_cast<std::size_t>(i)] =
            brute_count(n0 + 2 * i, m1, m2, bits3, Exec::Serial);
      }
    }
  }
  for (std::int64_t i = 0; i < total; ++i) {
    if (rep.counts[static_cast<std::size_t>(i)] == 0) {
      rep.failures.push_back(n0 + 2 * i);
    }
  }
  rep.ms = elapsed_ms(t0);
  return rep;
}

}  // namespace terngold::count
