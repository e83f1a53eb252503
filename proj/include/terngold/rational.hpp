#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace terngold {

// Exact rational arithmetic.  All mathematical verdicts in this project are
// decided over Rat; doubles appear only in search heuristics and spectral
// diagnostics, and anything found that way is re-verified exactly.
using Rat = mpq_class;

// Parses "p" or "p/q" in base 10 with an optional leading sign.  The result is
// canonicalized.  Throws std::invalid_argument on malformed input or q = 0.
Rat parse_rational(std::string_view text);

// Also accepts terminating decimals ("0.7" -> 7/10) next to the forms above,
// for command-line fractions where decimal notation is the natural input.
Rat parse_rational_or_decimal(std::string_view text);

// Canonical "p" / "p/q" form (no spaces, denominator omitted when 1).
std::string rational_to_string(const Rat& q);

// Exact conversion: every finite double is a dyadic rational.
// Throws std::invalid_argument for NaN or infinity.
Rat rational_from_double(double v);

inline double rational_to_double(const Rat& q) { return q.get_d(); }

inline int sign(const Rat& q) { return sgn(q); }

// --- common-denominator views -----------------------------------------------
//
// Hot scanning kernels avoid GMP in the inner loop by rewriting a rational
// vector as integer numerators over one shared denominator and comparing with
// 128-bit intermediates.  The rewrite is refused (nullopt) when the shared
// denominator or any numerator would exceed the given caps, in which case
// callers fall back to the exact GMP path.

// Least common multiple of all denominators, or nullopt if it exceeds cap.
std::optional<std::int64_t> common_denominator(std::span<const Rat> values,
                                               std::int64_t cap);

// Numerators of values over the shared denominator den (which every
// denominator must divide), or nullopt if any |numerator| exceeds cap.
std::optional<std::vector<std::int64_t>> scaled_numerators(
    std::span<const Rat> values, std::int64_t den, std::int64_t cap);

// Exact widening of a 128-bit intermediate back into GMP land (used when a
// fast kernel's winning value must be reported as an exact rational).
mpz_class mpz_from_int128(__int128 v);

}  // namespace terngold
