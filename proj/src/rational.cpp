#include "terngold/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace terngold {

namespace {

// long is 64-bit on every platform this project targets.
static_assert(sizeof(long) == 8);

bool fits_int64(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0;
}

std::int64_t to_int64(const mpz_class& z) {
  return mpz_get_si(z.get_mpz_t());
}

}  // namespace

Rat parse_rational(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string_view::npos) {
    throw std::invalid_argument("empty rational literal");
  }
  std::string body(text.substr(begin, end - begin + 1));
  try {
    size_t slash = body.find('/');
    if (slash == std::string::npos) {
      mpz_class num(body, 10);
      return Rat(num);
    }
    mpz_class num(body.substr(0, slash), 10);
    mpz_class den(body.substr(slash + 1), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + body + "'");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal '" + body + "'");
  }
}

Rat parse_rational_or_decimal(std::string_view text) {
  size_t dot = text.find('.');
  if (dot == std::string_view::npos || text.find('/') != std::string_view::npos) {
    return parse_rational(text);
  }
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t\r\n");
  std::string body(text.substr(begin, end - begin + 1));
  dot = body.find('.');
  std::string digits = body.substr(0, dot) + body.substr(dot + 1);
  const std::size_t frac_digits = body.size() - dot - 1;
  if (frac_digits == 0 || dot == 0 ||
      (dot == 1 && (body[0] == '+' || body[0] == '-'))) {
    // require digits on both sides of the point
    throw std::invalid_argument("bad decimal literal '" + body + "'");
  }
  try {
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad decimal literal '" + body + "'");
  }
}

std::string rational_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();  // direct Rat(p, q) construction does not reduce
  return c.get_str();
}

Rat rational_from_double(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("non-finite value has no rational form");
  }
  Rat q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

std::optional<std::int64_t> common_denominator(std::span<const Rat> values,
                                               std::int64_t cap) {
  mpz_class l(1);
  for (const Rat& q : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    if (!fits_int64(l) || to_int64(l) > cap) return std::nullopt;
  }
  return to_int64(l);
}

mpz_class mpz_from_int128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  mpz_class hi((unsigned long)(u >> 64));
  mpz_class out = (hi << 64) + mpz_class((unsigned long)u);
  return neg ? mpz_class(-out) : out;
}

std::optional<std::vector<std::int64_t>> scaled_numerators(
    std::span<const Rat> values, std::int64_t den, std::int64_t cap) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  mpz_class scaled;
  for (const Rat& q : values) {
    mpz_divexact(scaled.get_mpz_t(), mpz_class(den).get_mpz_t(),
                 q.get_den().get_mpz_t());
    scaled *= q.get_num();
    if (!fits_int64(scaled)) return std::nullopt;
    std::int64_t v = to_int64(scaled);
    if (v > cap || v < -cap) return std::nullopt;
    out.push_back(v);
  }
  return out;
}

}  // namespace terngold
