#ifndef KOSZUL_RATIONAL_HPP
#define KOSZUL_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace koszul {

/// Exact arbitrary-precision rational. All coefficient arithmetic in the
/// library goes through this type; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// q^k for k >= 0.
inline Rational rat_pow(const Rational& q, unsigned k) {
  Rational acc(1);
  for (unsigned i = 0; i < k; ++i) acc *= q;
  return acc;
}

inline Rational factorial(unsigned n) {
  Rational acc(1);
  for (unsigned i = 2; i <= n; ++i) acc *= Rational(static_cast<long>(i));
  return acc;
}

/// "3", "-3", "2/3" style rendering; denominator omitted when 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace koszul

#endif
