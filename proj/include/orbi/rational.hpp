#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace orbi {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or "p" when the value is integral.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --q;
  return r - Rational(q);
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace orbi
