#pragma once

#include <gmpxx.h>

#include <string>

namespace qsh {

// Exact rational scalar. Gram entries are sums of up to N! roots of unity
// with rational coefficients, so fixed-width arithmetic is not an option.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qsh
