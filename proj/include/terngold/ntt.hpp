#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace terngold::ntt {

// Exact convolution of nonnegative integer sequences via number-theoretic
// transforms.  A coefficient bound is computed up front; when it fits one
// transform prime a single pass is used, otherwise two primes are combined
// by Chinese remaindering.  Throws std::overflow_error when even the
// two-prime range cannot hold the coefficients, and std::length_error when
// the padded length exceeds the transforms' power-of-two capacity.
std::vector<std::int64_t> convolve(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b);

// Quadratic reference implementation (the testing oracle).
std::vector<std::int64_t> convolve_schoolbook(std::span<const std::int64_t> a,
                                              std::span<const std::int64_t> b);

}  // namespace terngold::ntt
