#pragma once

#include <Eigen/Core>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "qshuffle/errors.hpp"

namespace qsh {

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long, Eigen::Dynamic, 1>;

// A finite index set I with a symmetric Z-valued bilinear form i.j on Z[I].
// Arbitrary symmetric matrices are accepted; the finite-type shape (i.i in
// {2,4,6}, off-diagonal <= 0) is only required by the presets and by the
// operations that explicitly ask for d_i.
class CartanData {
 public:
  CartanData() : dot_(0, 0) {}

  explicit CartanData(IntMatrix dot) : dot_(std::move(dot)) {
    if (dot_.rows() != dot_.cols()) throw ConfigError("Cartan matrix must be square");
    for (int i = 0; i < dot_.rows(); ++i)
      for (int j = 0; j < i; ++j)
        if (dot_(i, j) != dot_(j, i)) throw ConfigError("Cartan matrix must be symmetric");
  }

  static CartanData preset(const std::string& name) {
    auto make = [](std::initializer_list<std::initializer_list<long>> rows) {
      IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows.size()));
      int i = 0;
      for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
      }
      return CartanData(m);
    };
    if (name == "A1") return make({{2}});
    if (name == "A1xA1") return make({{2, 0}, {0, 2}});
    if (name == "A2") return make({{2, -1}, {-1, 2}});
    if (name == "A3") return make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    if (name == "B2") return make({{2, -2}, {-2, 4}});
    if (name == "G2") return make({{2, -3}, {-3, 6}});
    throw ConfigError("unknown Cartan preset: " + name);
  }

  int rank() const { return static_cast<int>(dot_.rows()); }

  long dot(int i, int j) const { return dot_(i, j); }
  const IntMatrix& dot_matrix() const { return dot_; }

  bool simply_laced() const {
    for (int i = 0; i < rank(); ++i) {
      if (dot_(i, i) != 2) return false;
      for (int j = 0; j < rank(); ++j)
        if (i != j && dot_(i, j) != 0 && dot_(i, j) != -1) return false;
    }
    return true;
  }

  // d_i = (i.i)/2; defined only when the diagonal entry is a positive even
  // number, which the finite-type presets guarantee.
  long d(int i) const {
    long ii = dot_(i, i);
    if (ii <= 0 || ii % 2 != 0)
      throw ConfigError("d_i undefined: diagonal entry is not a positive even number");
    return ii / 2;
  }

 private:
  IntMatrix dot_;
};

// An element of N[I]: how many times each generator index occurs.
struct MultiDegree {
  Eigen::VectorXi v;

  MultiDegree() : v(0) {}
  explicit MultiDegree(int rank) : v(Eigen::VectorXi::Zero(rank)) {}
  explicit MultiDegree(Eigen::VectorXi counts) : v(std::move(counts)) {}

  static MultiDegree unit(int rank, int i) {
    MultiDegree d(rank);
    d.v[i] = 1;
    return d;
  }

  int rank() const { return static_cast<int>(v.size()); }
  int operator[](int i) const { return v[i]; }
  int depth() const { return v.sum(); }
  bool is_zero() const { return depth() == 0; }

  friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
    if (a.rank() != b.rank()) throw SizeMismatch("multidegree rank mismatch");
    return MultiDegree(a.v + b.v);
  }

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
    return a.rank() == b.rank() && a.v == b.v;
  }
  friend bool operator!=(const MultiDegree& a, const MultiDegree& b) { return !(a == b); }
  friend bool operator<(const MultiDegree& a, const MultiDegree& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return std::lexicographical_compare(a.v.data(), a.v.data() + a.v.size(), b.v.data(),
                                        b.v.data() + b.v.size());
  }
};

// A weight: integer functional on Z[I], stored as its vector of pairings with
// the generators. One convention serves both the simply-laced and general
// cases: user-facing coordinates are scaled by d_i on input (see
// weight_from_coordinates), after which every Chapter-style bracket reads the
// stored pairing directly.
struct Weight {
  IntVector v;

  Weight() : v(0) {}
  explicit Weight(int rank) : v(IntVector::Zero(rank)) {}
  explicit Weight(IntVector values) : v(std::move(values)) {}

  int rank() const { return static_cast<int>(v.size()); }
  long operator[](int i) const { return v[i]; }

  friend Weight operator+(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw SizeMismatch("weight rank mismatch");
    return Weight(IntVector(a.v + b.v));
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw SizeMismatch("weight rank mismatch");
    return Weight(IntVector(a.v - b.v));
  }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.rank() == b.rank() && a.v == b.v;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
};

// Bilinear extension of the dot matrix to (signed) multidegree vectors.
inline long dot_product(const CartanData& c, const Eigen::VectorXi& nu,
                        const Eigen::VectorXi& mu) {
  if (nu.size() != c.rank() || mu.size() != c.rank())
    throw SizeMismatch("dot_product: rank mismatch");
  long s = 0;
  for (int i = 0; i < c.rank(); ++i) {
    if (nu[i] == 0) continue;
    for (int j = 0; j < c.rank(); ++j) s += static_cast<long>(nu[i]) * mu[j] * c.dot(i, j);
  }
  return s;
}

inline long dot_product(const CartanData& c, const MultiDegree& nu, const MultiDegree& mu) {
  return dot_product(c, nu.v, mu.v);
}

// lambda_nu: the weight i -> i.nu.
inline Weight lambda_nu(const CartanData& c, const MultiDegree& nu) {
  if (nu.rank() != c.rank()) throw SizeMismatch("lambda_nu: rank mismatch");
  Weight w(c.rank());
  for (int i = 0; i < c.rank(); ++i) {
    long s = 0;
    for (int j = 0; j < c.rank(); ++j) s += c.dot(i, j) * nu[j];
    w.v[i] = s;
  }
  return w;
}

// <Lambda, nu> = sum_i nu_i <Lambda, i>.
inline long pairing(const Weight& w, const MultiDegree& nu) {
  if (w.rank() != nu.rank()) throw SizeMismatch("pairing: rank mismatch");
  long s = 0;
  for (int i = 0; i < w.rank(); ++i) s += w.v[i] * nu[i];
  return s;
}

// The weight pairing to -1 with every generator (in user coordinates);
// stored internally as -d_i so the unified bracket convention applies.
inline Weight minus_rho(const CartanData& c) {
  Weight w(c.rank());
  for (int i = 0; i < c.rank(); ++i) w.v[i] = -c.d(i);
  return w;
}

// Builds the stored weight from coordinates <i, Lambda>: entry i scales by
// d_i. For simply-laced data this is the identity.
inline Weight weight_from_coordinates(const CartanData& c, const std::vector<long>& coords) {
  if (static_cast<int>(coords.size()) != c.rank())
    throw ConfigError("weight has wrong number of entries");
  Weight w(c.rank());
  bool scaled = !c.simply_laced();
  for (int i = 0; i < c.rank(); ++i) w.v[i] = scaled ? coords[i] * c.d(i) : coords[i];
  return w;
}

// All multidegrees of depth <= max_depth, ordered by (depth, lex).
inline std::vector<MultiDegree> enumerate_multidegrees(int rank, int max_depth) {
  std::vector<MultiDegree> out;
  for (int depth = 0; depth <= max_depth; ++depth) {
    MultiDegree nu(rank);
    // iterate compositions of `depth` into `rank` nonnegative parts, lex order
    std::vector<int> parts(static_cast<std::size_t>(rank), 0);
    if (rank == 0) {
      if (depth == 0) out.emplace_back(nu);
      continue;
    }
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (pos == rank - 1) {
        parts[pos] = rem;
        MultiDegree d(rank);
        for (int i = 0; i < rank; ++i) d.v[i] = parts[i];
        out.push_back(d);
        return;
      }
      for (int k = 0; k <= rem; ++k) {
        parts[pos] = k;
        rec(pos + 1, rem - k);
      }
    };
    rec(0, depth);
  }
  return out;
}

}  // namespace qsh
