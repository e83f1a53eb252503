#include "terngold/modulus.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace terngold::mod {

namespace {

Modulus analyze(std::int64_t m, bool allow_factor_2) {
  if (m < 1) {
    throw std::invalid_argument("modulus must be positive");
  }
  Modulus out;
  out.m = m;
  std::int64_t rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) {
      throw std::invalid_argument("modulus divisible by " + std::to_string(p) +
                                  "^2 is not square-free");
    }
    out.prime_factors.push_back(p);
  }
  if (rest > 1) out.prime_factors.push_back(rest);

  bool even = !out.prime_factors.empty() && out.prime_factors.front() == 2;
  if (even && !allow_factor_2) {
    throw std::invalid_argument("modulus must be odd (factor 2 found)");
  }
  out.squarefree_odd = !even;
  out.coprime_to_30 = m % 2 != 0 && m % 3 != 0 && m % 5 != 0;
  out.phi = 1;
  for (std::int64_t p : out.prime_factors) out.phi *= p - 1;
  return out;
}

// Extended gcd: returns g and writes x with a*x ≡ g (mod m).
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                     std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

Modulus analyze_modulus(std::int64_t m) { return analyze(m, false); }

Modulus analyze_modulus_relaxed(std::int64_t m) { return analyze(m, true); }

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t x, y;
  a %= m;
  if (a < 0) a += m;
  std::int64_t g = ext_gcd(a, m, x, y);
  if (g != 1) {
    throw std::invalid_argument(std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
  }
  x %= m;
  if (x < 0) x += m;
  return x;
}

std::int64_t CrtCoordinates::join(std::int64_t u, std::int64_t v) const {
  u %= m1;
  if (u < 0) u += m1;
  v %= m2;
  if (v < 0) v += m2;
  // c1, c2 < m <= 2^31 in all desk-scale uses; the products fit in int64 via
  // __int128 to stay safe for large W products anyway.
  __int128 x = (__int128)u * c1 + (__int128)v * c2;
  return static_cast<std::int64_t>(x % m);
}

std::pair<std::int64_t, std::int64_t> CrtCoordinates::split(
    std::int64_t x) const {
  x %= m;
  if (x < 0) x += m;
  return {x % m1, x % m2};
}

CrtCoordinates make_crt(std::int64_t m1, std::int64_t m2) {
  if (m1 < 1 || m2 < 1 || std::gcd(m1, m2) != 1) {
    throw std::invalid_argument("CRT components must be positive and coprime");
  }
  CrtCoordinates crt;
  crt.m1 = m1;
  crt.m2 = m2;
  crt.m = m1 * m2;
  if (m1 == 1) {
    crt.c1 = 0;
    crt.c2 = 1;
  } else if (m2 == 1) {
    crt.c1 = 1;
    crt.c2 = 0;
  } else {
    // x ≡ u (m1), x ≡ v (m2):  x = u*m2*(m2^{-1} mod m1) + v*m1*(m1^{-1} mod m2)
    crt.c1 = static_cast<std::int64_t>(
        (__int128)m2 % crt.m * mod_inverse(m2 % m1, m1) % crt.m);
    crt.c2 = static_cast<std::int64_t>(
        (__int128)m1 % crt.m * mod_inverse(m1 % m2, m2) % crt.m);
  }
  return crt;
}

}  // namespace terngold::mod
