#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace terngold::mod {

// A validated square-free modulus with its factorization and totient.
// The strict form (analyze_modulus) insists on odd m; the relaxed form
// additionally admits the single even prime 2, which is needed only for the
// small-prime product W of the weight pipeline.
struct Modulus {
  std::int64_t m = 1;
  std::vector<std::int64_t> prime_factors;  // ascending, distinct
  std::int64_t phi = 1;
  bool squarefree_odd = false;
  bool coprime_to_30 = false;
};

// Trial-division factorization; throws std::invalid_argument for m < 1, even
// m, or a squared prime factor (naming the offending prime).
Modulus analyze_modulus(std::int64_t m);

// Same, but the factor 2 is permitted (m/2 must still be odd).
Modulus analyze_modulus_relaxed(std::int64_t m);

bool is_prime(std::int64_t p);

// Modular inverse of a modulo m (gcd(a, m) must be 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Index bijection Z_m <-> Z_{m1} x Z_{m2} for coprime m1, m2.
struct CrtCoordinates {
  std::int64_t m = 1, m1 = 1, m2 = 1;

  std::int64_t join(std::int64_t u, std::int64_t v) const;  // (u, v) -> Z_m
  std::pair<std::int64_t, std::int64_t> split(std::int64_t x) const;

  // join coefficients: x = u*c1 + v*c2 (mod m)
  std::int64_t c1 = 0, c2 = 0;
};

CrtCoordinates make_crt(std::int64_t m1, std::int64_t m2);

}  // namespace terngold::mod
