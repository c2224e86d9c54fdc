#pragma once

#include <Eigen/Core>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/rational.hpp"

namespace qsh {

namespace detail {

using Poly = std::vector<Rational>;  // coefficient of x^k at index k

inline void poly_trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

// Quotient and remainder in Q[x]; b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  poly_trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (is_zero(a[k])) continue;
    Rational f = a[k] / lead;
    q[k - b.size() + 1] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= f * b[j];
    if (k == 0) break;
  }
  poly_trim(a);
  return {q, a};
}

}  // namespace detail

// Precomputed data for Q(zeta_l): the l-th cyclotomic polynomial and a table
// of reduced monomial powers. Residues mod Phi_l give a canonical form, so
// equality-to-zero is decidable; that is what exact radical ranks need.
struct CycloTable {
  int l = 1;
  int phi = 1;
  detail::Poly min_poly;                     // Phi_l, monic, degree phi
  std::vector<detail::Poly> power;           // power[k] = x^k mod Phi_l
};

namespace detail {

inline Poly cyclotomic_polynomial(int l, std::map<int, Poly>& memo) {
  auto it = memo.find(l);
  if (it != memo.end()) return it->second;
  // Phi_l = (x^l - 1) / prod_{d | l, d < l} Phi_d
  Poly p(l + 1, Rational(0));
  p[0] = Rational(-1);
  p[l] = Rational(1);
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    auto [q, r] = poly_divmod(p, cyclotomic_polynomial(d, memo));
    if (!r.empty()) throw Error("cyclotomic polynomial division not exact");
    p = std::move(q);
  }
  memo.emplace(l, p);
  return p;
}

}  // namespace detail

inline const CycloTable& cyclo_table(int l) {
  if (l < 1) throw ConfigError("root-of-unity order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<CycloTable>();
  t->l = l;
  std::map<int, detail::Poly> memo;
  t->min_poly = detail::cyclotomic_polynomial(l, memo);
  t->phi = static_cast<int>(t->min_poly.size()) - 1;
  const int upper = std::max(l, 2 * t->phi - 1);
  t->power.resize(upper);
  for (int k = 0; k < upper; ++k) {
    detail::Poly xk(k + 1, Rational(0));
    xk[k] = Rational(1);
    t->power[k] = detail::poly_divmod(xk, t->min_poly).second;
  }
  auto& slot = cache[l];
  slot = std::move(t);
  return *slot;
}

// An element of Q(zeta_l), stored as the reduced residue mod Phi_l.
// order() == 0 marks a plain rational constant not yet tied to a field; it
// promotes on contact with any value of positive order. Values are immutable
// in spirit: all operations return fresh objects, so sharing across threads
// is safe.
class Cyclo {
 public:
  Cyclo() : l_(0), c_(1, Rational(0)) {}
  Cyclo(long n) : l_(0), c_(1, Rational(n)) {}
  Cyclo(const Rational& r) : l_(0), c_(1, r) {}

  static Cyclo zeta(int l, long e) {
    const CycloTable& t = cyclo_table(l);
    long k = e % l;
    if (k < 0) k += l;
    Cyclo z;
    z.l_ = l;
    z.c_.assign(t.phi, Rational(0));
    const detail::Poly& p = t.power[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < p.size(); ++i) z.c_[i] = p[i];
    return z;
  }

  int order() const { return l_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!qsh::is_zero(x)) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!qsh::is_zero(c_[i])) return false;
    return true;
  }

  // Constant term; meaningful only when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  const std::vector<Rational>& coefficients() const { return c_; }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  Cyclo operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = aligned(a, b);
    if (x.l_ == 0) {
      x.c_[0] *= y.c_[0];
      return x;
    }
    const CycloTable& t = cyclo_table(x.l_);
    std::vector<Rational> raw(2 * t.phi - 1, Rational(0));
    for (int i = 0; i < t.phi; ++i) {
      if (qsh::is_zero(x.c_[i])) continue;
      for (int j = 0; j < t.phi; ++j) {
        if (qsh::is_zero(y.c_[j])) continue;
        raw[i + j] += x.c_[i] * y.c_[j];
      }
    }
    Cyclo r;
    r.l_ = x.l_;
    r.c_.assign(t.phi, Rational(0));
    for (int k = 0; k < t.phi; ++k) r.c_[k] = raw[k];
    for (int k = t.phi; k < 2 * t.phi - 1; ++k) {
      if (qsh::is_zero(raw[k])) continue;
      const detail::Poly& p = t.power[k];
      for (std::size_t i = 0; i < p.size(); ++i) r.c_[i] += raw[k] * p[i];
    }
    return r;
  }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  // Multiplicative inverse via the extended Euclid algorithm in Q[x].
  Cyclo inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    if (l_ == 0 || is_rational()) {
      Cyclo r = *this;
      Rational inv = Rational(1) / c_[0];
      r.c_.assign(r.c_.size(), Rational(0));
      r.c_[0] = inv;
      return r;
    }
    const CycloTable& t = cyclo_table(l_);
    // r0 = Phi, r1 = this; maintain s-coefficients for r1 only.
    detail::Poly r0 = t.min_poly, r1 = c_;
    detail::poly_trim(r1);
    detail::Poly s0, s1 = {Rational(1)};
    while (true) {
      auto [q, rem] = detail::poly_divmod(r0, r1);
      if (rem.empty()) break;
      detail::Poly qs = detail::poly_mul(q, s1);
      detail::Poly s2 = s0;
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      detail::poly_trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is the gcd: a nonzero constant since Phi_l is irreducible over Q.
    if (r1.size() != 1) throw Error("cyclotomic inverse: gcd not constant");
    Cyclo r;
    r.l_ = l_;
    r.c_.assign(t.phi, Rational(0));
    for (std::size_t i = 0; i < s1.size() && i < r.c_.size(); ++i) r.c_[i] = s1[i] / r1[0];
    return r;
  }

  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      if (x.c_[i] != y.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Rational-coefficient polynomial in "z" of degree < phi(l).
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (qsh::is_zero(c_[i])) continue;
      Rational a = c_[i];
      if (first) {
        if (sgn(a) < 0) {
          os << "-";
          a = -a;
        }
        first = false;
      } else {
        os << (sgn(a) < 0 ? " - " : " + ");
        if (sgn(a) < 0) a = -a;
      }
      const bool unit = (a == Rational(1));
      if (i == 0 || !unit) os << a.get_str();
      if (i > 0) {
        if (!unit) os << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  // Returns (a, b) lifted to a common order, a first.
  static std::pair<Cyclo, Cyclo> aligned(const Cyclo& a, const Cyclo& b) {
    if (a.l_ == b.l_) return {a, b};
    if (a.l_ != 0 && b.l_ != 0)
      throw SizeMismatch("mixing cyclotomic numbers of different orders");
    const Cyclo& hi = a.l_ ? a : b;
    const Cyclo& lo = a.l_ ? b : a;
    Cyclo lifted;
    lifted.l_ = hi.l_;
    lifted.c_.assign(hi.c_.size(), Rational(0));
    lifted.c_[0] = lo.c_[0];
    if (a.l_) return {a, lifted};
    return {lifted, b};
  }

  int l_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }
inline std::string to_string(const Cyclo& c) { return c.str(); }

}  // namespace qsh

namespace Eigen {

template <>
struct NumTraits<qsh::Cyclo> {
  using Real = qsh::Cyclo;
  using NonInteger = qsh::Cyclo;
  using Nested = qsh::Cyclo;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline qsh::Cyclo epsilon() { return qsh::Cyclo(0); }
  static inline qsh::Cyclo dummy_precision() { return qsh::Cyclo(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
