#pragma once

#include "qshuffle/cyclotomic.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/laurent.hpp"

namespace qsh {

// The two coefficient regimes. Scalars of one regime never mix with the
// other in a single computation; the ring handle is a run-scoped parameter.

// Q(zeta_l) for a fixed primitive l-th root of unity zeta.
struct CycloField {
  using Scalar = Cyclo;
  static constexpr bool is_field = true;

  int l = 1;

  CycloField() = default;
  explicit CycloField(int order) : l(order) {
    cyclo_table(l);  // validates l >= 1 and warms the reduction table
  }

  Scalar zero() const { return Cyclo(0); }
  Scalar one() const { return Cyclo(1); }
  Scalar from_int(long n) const { return Cyclo(n); }

  Scalar zeta_pow(long e) const { return Cyclo::zeta(l, e); }

  // [a] = 1 - zeta^{-2a}
  Scalar bracket(long a) const { return one() - zeta_pow(-2 * a); }

  // [a] evaluated at zeta_i = zeta^{d}, i.e. 1 - zeta^{-2 d a}.
  Scalar bracket_scaled(long a, long d) const { return bracket(d * a); }

  // [p]_i^! = prod_{a=1}^p (zeta_i^a - zeta_i^{-a}) / (zeta_i - zeta_i^{-1})
  Scalar q_factorial(long p, long d) const {
    Scalar den = zeta_pow(d) - zeta_pow(-d);
    if (qsh::is_zero(den))
      throw DivisionByZero("quantum factorial: zeta_i equals its inverse");
    Scalar r = one();
    for (long a = 1; a <= p; ++a) r *= (zeta_pow(d * a) - zeta_pow(-d * a)) / den;
    return r;
  }

  Scalar inv(const Scalar& x) const { return x.inverse(); }
  Scalar exact_div(const Scalar& a, const Scalar& b) const { return a / b; }
};

// Laurent polynomials in a generic parameter q; zeta^e is replaced by q^e.
struct LaurentRing {
  using Scalar = Laurent;
  static constexpr bool is_field = false;

  Scalar zero() const { return Laurent{}; }
  Scalar one() const { return Laurent(1); }
  Scalar from_int(long n) const { return Laurent(n); }

  Scalar zeta_pow(long e) const { return Laurent::q_power(e); }
  Scalar bracket(long a) const { return one() - zeta_pow(-2 * a); }
  Scalar bracket_scaled(long a, long d) const { return bracket(d * a); }

  Scalar exact_div(const Scalar& a, const Scalar& b) const {
    auto q = Laurent::divide_exact(a, b);
    if (!q) throw Error("inexact division in Laurent ring");
    return *q;
  }
};

}  // namespace qsh
