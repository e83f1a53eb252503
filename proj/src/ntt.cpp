#include "terngold/ntt.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace terngold::ntt {

namespace {

constexpr std::uint64_t kP1 = 998244353;   // 119 * 2^23 + 1, generator 3
constexpr std::uint64_t kP2 = 1004535809;  // 479 * 2^21 + 1, generator 3
constexpr std::size_t kCap1 = std::size_t{1} << 23;
constexpr std::size_t kCap2 = std::size_t{1} << 21;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  std::uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = (unsigned __int128)r * base % mod;
    base = (unsigned __int128)base * base % mod;
    exp >>= 1;
  }
  return r;
}

void transform(std::vector<std::uint64_t>& a, bool invert,
               std::uint64_t mod) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t wlen = pow_mod(3, (mod - 1) / len, mod);
    if (invert) wlen = pow_mod(wlen, mod - 2, mod);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint64_t u = a[i + j];
        const std::uint64_t v =
            (unsigned __int128)a[i + j + len / 2] * w % mod;
        a[i + j] = u + v < mod ? u + v : u + v - mod;
        a[i + j + len / 2] = u >= v ? u - v : u + mod - v;
        w = (unsigned __int128)w * wlen % mod;
      }
    }
  }
  if (invert) {
    const std::uint64_t inv_n = pow_mod(n, mod - 2, mod);
    for (std::uint64_t& x : a) x = (unsigned __int128)x * inv_n % mod;
  }
}

std::vector<std::uint64_t> multiply_mod(std::span<const std::int64_t> a,
                                        std::span<const std::int64_t> b,
                                        std::uint64_t mod, std::size_t n) {
  std::vector<std::uint64_t> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    fa[i] = static_cast<std::uint64_t>(a[i]) % mod;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    fb[i] = static_cast<std::uint64_t>(b[i]) % mod;
  }
  transform(fa, false, mod);
  transform(fb, false, mod);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = (unsigned __int128)fa[i] * fb[i] % mod;
  }
  transform(fa, true, mod);
  return fa;
}

// Upper bound on any output coefficient: each is a sum over one index of
// products, so both max(a)*sum(b) and sum(a)*max(b) dominate it.
unsigned __int128 coefficient_bound(std::span<const std::int64_t> a,
                                    std::span<const std::int64_t> b) {
  unsigned __int128 max_a = 0, max_b = 0, sum_a = 0, sum_b = 0;
  for (std::int64_t v : a) {
    if (v < 0) throw std::invalid_argument("convolution input is negative");
    max_a = std::max<unsigned __int128>(max_a, v);
    sum_a += static_cast<std::uint64_t>(v);
  }
  for (std::int64_t v : b) {
    if (v < 0) throw std::invalid_argument("convolution input is negative");
    max_b = std::max<unsigned __int128>(max_b, v);
    sum_b += static_cast<std::uint64_t>(v);
  }
  return std::min(max_a * sum_b, sum_a * max_b);
}

}  // namespace

std::vector<std::int64_t> convolve_schoolbook(std::span<const std::int64_t> a,
                                              std::span<const std::int64_t> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<std::int64_t> convolve(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const unsigned __int128 bound = coefficient_bound(a, b);
  if (std::min(a.size(), b.size()) <= 32 || out_len <= 1024) {
    if (bound > static_cast<unsigned __int128>(INT64_MAX)) {
      throw std::overflow_error("convolution coefficients exceed 63 bits");
    }
    return convolve_schoolbook(a, b);
  }
  const std::size_t n = std::bit_ceil(out_len);

  if (bound < kP1) {
    if (n > kCap1) {
      throw std::length_error("convolution length exceeds transform capacity");
    }
    std::vector<std::uint64_t> r = multiply_mod(a, b, kP1, n);
    std::vector<std::int64_t> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
      out[i] = static_cast<std::int64_t>(r[i]);
    }
    return out;
  }
  if (bound < (unsigned __int128)kP1 * kP2) {
    if (n > kCap2) {
      throw std::length_error("convolution length exceeds transform capacity");
    }
    std::vector<std::uint64_t> r1 = multiply_mod(a, b, kP1, n);
    std::vector<std::uint64_t> r2 = multiply_mod(a, b, kP2, n);
    const std::uint64_t inv_p1 = pow_mod(kP1 % kP2, kP2 - 2, kP2);
    std::vector<std::int64_t> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
      const std::uint64_t d =
          (r2[i] + kP2 - r1[i] % kP2) % kP2;
      const unsigned __int128 v =
          r1[i] + (unsigned __int128)kP1 * ((unsigned __int128)d * inv_p1 % kP2);
      out[i] = static_cast<std::int64_t>(v);
    }
    return out;
  }
  throw std::overflow_error(
      "convolution coefficients exceed the two-prime exact range");
}

}  // namespace terngold::ntt
