#pragma once

#include <Eigen/Core>
#include <optional>
#include <sstream>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/rational.hpp"

namespace qsh {

// Exact Laurent polynomial in one generic parameter q over Q. This is the
// coefficient ring of the generic regime: every zeta^e becomes q^e, with
// negative exponents first-class. An integral domain; no general division,
// but exact division (when it exists) is available for fraction-free
// elimination.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long n) { *this = Laurent(Rational(n)); }
  Laurent(const Rational& r) {
    if (!qsh::is_zero(r)) {
      lo_ = 0;
      c_.assign(1, r);
    }
  }

  static Laurent q_power(long e) {
    Laurent p;
    p.lo_ = e;
    p.c_.assign(1, Rational(1));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  long low_degree() const { return lo_; }
  long high_degree() const { return lo_ + static_cast<long>(c_.size()) - 1; }

  Rational coefficient(long e) const {
    if (is_zero() || e < lo_ || e > high_degree()) return Rational(0);
    return c_[static_cast<std::size_t>(e - lo_)];
  }

  bool is_rational() const { return is_zero() || (lo_ == 0 && c_.size() == 1); }
  Rational rational_part() const { return is_zero() ? Rational(0) : c_[0]; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.lo_, b.lo_);
    long hi = std::max(a.high_degree(), b.high_degree());
    Laurent r;
    r.lo_ = lo;
    r.c_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - lo + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - lo + i] += b.c_[i];
    r.normalize();
    return r;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Laurent r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (qsh::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (a.is_zero()) return Laurent{};
    if (a.c_.size() < b.c_.size()) return std::nullopt;
    // Long division of coefficient polynomials; q-shifts are units.
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational& lead = b.c_.back();
    for (std::size_t k = rem.size(); k-- >= b.c_.size();) {
      if (!qsh::is_zero(rem[k])) {
        Rational f = rem[k] / lead;
        quo[k - b.c_.size() + 1] = f;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
          rem[k - b.c_.size() + 1 + j] -= f * b.c_[j];
      }
      if (k == 0) break;
    }
    for (const auto& x : rem)
      if (!qsh::is_zero(x)) return std::nullopt;
    Laurent r;
    r.lo_ = a.lo_ - b.lo_;
    r.c_ = std::move(quo);
    r.normalize();
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (qsh::is_zero(c_[i])) continue;
      Rational a = c_[i];
      long e = lo_ + static_cast<long>(i);
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
      if (e == 0 || !unit) os << a.get_str();
      if (e != 0) {
        if (!unit) os << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    std::size_t head = 0;
    while (head < c_.size() && qsh::is_zero(c_[head])) ++head;
    std::size_t tail = c_.size();
    while (tail > head && qsh::is_zero(c_[tail - 1])) --tail;
    if (head == tail) {
      c_.clear();
      lo_ = 0;
      return;
    }
    if (head > 0 || tail < c_.size()) {
      std::vector<Rational> keep(c_.begin() + head, c_.begin() + tail);
      c_ = std::move(keep);
      lo_ += static_cast<long>(head);
    }
  }

  long lo_ = 0;
  std::vector<Rational> c_;  // empty means zero; otherwise ends are nonzero
};

inline bool is_zero(const Laurent& p) { return p.is_zero(); }
inline std::string to_string(const Laurent& p) { return p.str(); }

}  // namespace qsh

namespace Eigen {

template <>
struct NumTraits<qsh::Laurent> {
  using Real = qsh::Laurent;
  using NonInteger = qsh::Laurent;
  using Nested = qsh::Laurent;
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
  static inline qsh::Laurent epsilon() { return qsh::Laurent(0); }
  static inline qsh::Laurent dummy_precision() { return qsh::Laurent(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
