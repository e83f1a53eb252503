#include "terngold/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "terngold/modulus.hpp"

namespace terngold::fourier {

namespace {

using cplx = std::complex<double>;

void check_input(std::span<const double> f) {
  if (f.size() < 2 || !mod::is_prime(static_cast<std::int64_t>(f.size()))) {
    throw std::invalid_argument("transform length " +
                                std::to_string(f.size()) +
                                " must be prime (and at least 2)");
  }
  for (double v : f) {
    if (!(v >= 0)) {
      throw std::invalid_argument("transform input must be nonnegative");
    }
  }
}

// In-place power-of-two FFT, sign +1 forward here (matching e_N), -1 inverse
// without the 1/n scaling.
void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// exp(pi*i*k^2/N) with the angle reduced via k^2 mod 2N for precision.
cplx chirp(std::int64_t k, std::int64_t n, int sign) {
  const std::int64_t red = (k % (2 * n)) * (k % (2 * n)) % (2 * n);
  const double ang =
      sign * std::numbers::pi * static_cast<double>(red) /
      static_cast<double>(n);
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace

std::vector<cplx> dft_direct(std::span<const double> f) {
  const std::int64_t n = static_cast<std::int64_t>(f.size());
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    // accumulate by reduced phase index r*x mod n to keep angles small
    cplx acc(0.0, 0.0);
    for (std::int64_t x = 0; x < n; ++x) {
      const std::int64_t idx = r * x % n;
      const double ang = 2.0 * std::numbers::pi * static_cast<double>(idx) /
                         static_cast<double>(n);
      acc += f[static_cast<std::size_t>(x)] *
             cplx(std::cos(ang), std::sin(ang));
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

std::vector<cplx> dft_fast(std::span<const double> f) {
  const std::int64_t n = static_cast<std::int64_t>(f.size());
  // rx = (r^2 + x^2 - (r-x)^2)/2 turns the transform into the convolution
  // of f(x)*chirp(x) with the conjugate chirp.
  const std::size_t conv_len =
      std::bit_ceil(static_cast<std::size_t>(2 * n - 1));
  std::vector<cplx> u(conv_len, cplx(0, 0)), v(conv_len, cplx(0, 0));
  for (std::int64_t x = 0; x < n; ++x) {
    u[static_cast<std::size_t>(x)] =
        f[static_cast<std::size_t>(x)] * chirp(x, n, +1);
  }
  for (std::int64_t k = -(n - 1); k <= n - 1; ++k) {
    v[static_cast<std::size_t>(k + n - 1)] = chirp(k, n, -1);
  }
  fft_pow2(u, +1);
  fft_pow2(v, +1);
  for (std::size_t i = 0; i < conv_len; ++i) u[i] *= v[i];
  fft_pow2(u, -1);
  const double inv = 1.0 / static_cast<double>(conv_len);
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    out[static_cast<std::size_t>(r)] =
        chirp(r, n, +1) * u[static_cast<std::size_t>(r + n - 1)] * inv;
  }
  return out;
}

SpectrumReport fourier_transform(std::span<const double> f, bool fast) {
  check_input(f);
  SpectrumReport rep;
  rep.n = static_cast<std::int64_t>(f.size());
  rep.fast = fast;
  rep.values = fast ? dft_fast(f) : dft_direct(f);
  double lhs = 0, rhs = 0;
  for (const cplx& c : rep.values) lhs += std::norm(c);
  for (double x : f) rhs += x * x;
  rhs *= static_cast<double>(rep.n);
  rep.parseval_lhs = lhs;
  rep.parseval_rhs = rhs;
  rep.parseval_rel_err = std::abs(lhs - rhs) / std::max(rhs, 1.0);
  return rep;
}

PseudorandomnessReport pseudorandomness_report(
    std::span<const double> mu, const std::array<std::vector<double>, 3>& a,
    double q, double delta) {
  check_input(mu);
  if (!(q > 2.0) || !(q < 3.0)) {
    throw std::invalid_argument("the l^q exponent must lie in (2, 3), got " +
                                std::to_string(q));
  }
  const std::size_t n = mu.size();
  PseudorandomnessReport rep;
  rep.n = static_cast<std::int64_t>(n);
  rep.q = q;
  rep.delta = delta;

  const std::vector<cplx> mu_hat = dft_fast(mu);
  double eta = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const cplx target = r == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    eta = std::max(eta, std::abs(mu_hat[r] - target));
  }
  rep.eta_observed = eta;

  for (int i = 0; i < 3; ++i) {
    const std::vector<double>& ai = a[static_cast<std::size_t>(i)];
    if (ai.size() != n) {
      throw std::invalid_argument("minorant " + std::to_string(i + 1) +
                                  " length differs from the majorant's");
    }
    check_input(ai);
    bool maj = true;
    double total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (ai[x] > mu[x]) maj = false;
      total += ai[x];
    }
    rep.majorized[static_cast<std::size_t>(i)] = maj;
    rep.deltas[static_cast<std::size_t>(i)] = total;
    const std::vector<cplx> a_hat = dft_fast(ai);
    double acc = 0;
    for (const cplx& c : a_hat) acc += std::pow(std::abs(c), q);
    rep.lq_norms[static_cast<std::size_t>(i)] = std::pow(acc, 1.0 / q);
  }
  rep.min_delta_slack =
      std::min({rep.deltas[0], rep.deltas[1], rep.deltas[2],
                rep.deltas[0] + rep.deltas[1] + rep.deltas[2] - 1.0});
  rep.mean_condition = rep.min_delta_slack >= delta;
  return rep;
}

}  // namespace terngold::fourier
