#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace terngold::fourier {

// Transforms use the positive-sign convention
//   fhat(r) = sum_x f(x) * exp(+2*pi*i*r*x / N)
// over a prime length N, unnormalized, so sum_r |fhat(r)|^2 = N * sum_x f(x)^2.

struct SpectrumReport {
  std::int64_t n = 0;
  std::vector<std::complex<double>> values;  // fhat(0..N-1)
  double parseval_lhs = 0;      // sum_r |fhat(r)|^2
  double parseval_rhs = 0;      // N * sum_x f(x)^2
  double parseval_rel_err = 0;  // |lhs - rhs| / max(rhs, 1)
  bool fast = true;             // chirp-transform path vs direct evaluation
};

// Requires prime N and nonnegative entries.  fast = false forces the O(N^2)
// direct evaluation (the testing oracle); fast = true uses the chirp
// transform (prime lengths have no radix split, so the transform is
// rewritten as a convolution and done by zero-padded power-of-two FFT).
SpectrumReport fourier_transform(std::span<const double> f, bool fast = true);

// Raw transforms without the report wrapper.
std::vector<std::complex<double>> dft_direct(std::span<const double> f);
std::vector<std::complex<double>> dft_fast(std::span<const double> f);

struct PseudorandomnessReport {
  std::int64_t n = 0;
  double q = 0;
  double delta = 0;
  double eta_observed = 0;            // max_r |muhat(r) - [r == 0]|
  std::array<bool, 3> majorized{};    // a_i(x) <= mu(x) for all x
  std::array<double, 3> lq_norms{};   // (sum_r |ahat_i(r)|^q)^(1/q)
  std::array<double, 3> deltas{};     // sum_x a_i(x)
  double min_delta_slack = 0;         // min(d1, d2, d3, d1+d2+d3-1)
  bool mean_condition = false;        // min_delta_slack >= delta
};

// Diagnostics for the transference hypotheses: majorization of each a_i by
// mu, the sup-norm distance of muhat from the delta at zero, l^q norms of
// the minorant transforms for q in (2, 3), and the mean condition at
// threshold delta.  All vectors must share one prime length and be
// nonnegative.
PseudorandomnessReport pseudorandomness_report(
    std::span<const double> mu, const std::array<std::vector<double>, 3>& a,
    double q, double delta);

}  // namespace terngold::fourier
