#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qshuffle/linalg.hpp"
#include "qshuffle/tensor_module.hpp"

namespace qsh {

// Quotients by the radical of the contravariant forms: f = F / Ker(S) and
// L(Lambda) = V(Lambda) / Ker(S_Lambda), one graded component at a time.
// Representatives are ambient basis words picked greedily in lexicographic
// order, so every matrix in sight is reproducible.

inline void require_quantum_regime(int l) {
  if (l <= 3 || std::gcd(l, 6) != 1)
    throw ConfigError("quotient-algebra features need l > 3 with gcd(l, 6) = 1");
}

template <class S>
struct QuotientBasis {
  MultiDegree nu;
  std::vector<Word> ambient;        // lexicographic word basis of the component
  std::map<Word, int> ambient_index;
  std::vector<int> selected;        // indices of representative words
  Mat<S> projection;                // selected.size() x ambient.size()
  Mat<S> kernel;                    // ambient.size() x corank

  int ambient_dim() const { return static_cast<int>(ambient.size()); }
  int dim() const { return static_cast<int>(selected.size()); }

  // Class of an ambient-basis linear combination in representative coordinates.
  Vec<S> project(const Lin<S>& x) const {
    Vec<S> v(projection.rows());
    for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = S(0);
    for (const auto& [w, c] : x) {
      auto it = ambient_index.find(w);
      if (it == ambient_index.end()) throw SizeMismatch("word outside the graded component");
      for (Eigen::Index k = 0; k < projection.rows(); ++k)
        v[k] += projection(k, it->second) * c;
    }
    return v;
  }
};

template <class Ring>
QuotientBasis<typename Ring::Scalar> quotient_from_gram(const Ctx<Ring>& ctx,
                                                        const MultiDegree& nu,
                                                        const Mat<typename Ring::Scalar>& gram,
                                                        std::vector<Word> basis) {
  static_assert(Ring::is_field, "radical quotients need a field");
  using S = typename Ring::Scalar;
  QuotientBasis<S> q;
  q.nu = nu;
  q.ambient = std::move(basis);
  for (std::size_t k = 0; k < q.ambient.size(); ++k)
    q.ambient_index.emplace(q.ambient[k], static_cast<int>(k));
  auto e = rref(ctx.ring, gram);
  q.selected = e.pivot_cols;
  q.projection = e.r.topRows(e.rank);
  q.kernel = kernel_basis(ctx.ring, gram);
  return q;
}

template <class Ring>
QuotientBasis<typename Ring::Scalar> radical_basis_f(const Ctx<Ring>& ctx, const MultiDegree& nu) {
  require_quantum_regime(ctx.ring.l);
  return quotient_from_gram(ctx, nu, gram_matrix(ctx, nu), word_basis(nu));
}

template <class Ring>
Mat<typename Ring::Scalar> gram_matrix_verma(const Ctx<Ring>& ctx, const Weight& lambda,
                                             const MultiDegree& nu,
                                             bool use_permutation_sum = false) {
  using S = typename Ring::Scalar;
  const auto basis = word_basis(nu);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  Mat<S> g(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      g(a, b) = use_permutation_sum ? form_s_lambda_perm(ctx, lambda, basis[a], basis[b])
                                    : form_s_lambda_rec(ctx, lambda, basis[a], basis[b]);
  return g;
}

template <class Ring>
QuotientBasis<typename Ring::Scalar> radical_basis_l(const Ctx<Ring>& ctx, const Weight& lambda,
                                                     const MultiDegree& nu) {
  require_quantum_regime(ctx.ring.l);
  return quotient_from_gram(ctx, nu, gram_matrix_verma(ctx, lambda, nu), word_basis(nu));
}

// ---------------------------------------------------------------------------
// The irreducible module L(Lambda) within an explicit degree window, together
// with the operators theta_i, epsilon_i and the grading characters K_i.

template <class Ring>
struct IrreducibleModule {
  Weight lambda;
  int depth_max = 0;
  std::map<MultiDegree, QuotientBasis<typename Ring::Scalar>> components;

  const QuotientBasis<typename Ring::Scalar>& at(const MultiDegree& nu) const {
    auto it = components.find(nu);
    if (it == components.end())
      throw WindowExceeded("irreducible module: degree outside the computed window");
    return it->second;
  }

  int dim(const MultiDegree& nu) const {
    auto it = components.find(nu);
    return it == components.end() ? 0 : it->second.dim();
  }
};

template <class Ring>
IrreducibleModule<Ring> build_irreducible(const Ctx<Ring>& ctx, const Weight& lambda,
                                          int depth_max) {
  IrreducibleModule<Ring> mod;
  mod.lambda = lambda;
  mod.depth_max = depth_max;
  for (const MultiDegree& nu : enumerate_multidegrees(ctx.rank(), depth_max))
    mod.components.emplace(nu, radical_basis_l(ctx, lambda, nu));
  return mod;
}

// Matrix of theta_i : L_nu -> L_{nu+i} on representative classes.
template <class Ring>
Mat<typename Ring::Scalar> theta_matrix(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod,
                                        int i, const MultiDegree& nu) {
  using S = typename Ring::Scalar;
  const auto& src = mod.at(nu);
  const auto& dst = mod.at(nu + MultiDegree::unit(ctx.rank(), i));
  Mat<S> m = zero_matrix<S>(dst.dim(), src.dim());
  for (int k = 0; k < src.dim(); ++k) {
    Word w = src.ambient[static_cast<std::size_t>(src.selected[static_cast<std::size_t>(k)])];
    w.insert(w.begin(), i);
    Lin<S> x;
    x.emplace(w, ctx.ring.one());
    m.col(k) = dst.project(x);
  }
  return m;
}

// Matrix of epsilon_i : L_nu -> L_{nu-i}; well defined because the radical is
// invariant under the adjoint operators.
template <class Ring>
Mat<typename Ring::Scalar> epsilon_matrix(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod,
                                          int i, const MultiDegree& nu) {
  using S = typename Ring::Scalar;
  const auto& src = mod.at(nu);
  if (nu[i] == 0) return zero_matrix<S>(0, src.dim());
  MultiDegree down = nu;
  down.v[i] -= 1;
  const auto& dst = mod.at(down);
  Mat<S> m = zero_matrix<S>(dst.dim(), src.dim());
  for (int k = 0; k < src.dim(); ++k) {
    Lin<S> x;
    x.emplace(src.ambient[static_cast<std::size_t>(src.selected[static_cast<std::size_t>(k)])],
              ctx.ring.one());
    m.col(k) = dst.project(epsilon_i(ctx, mod.lambda, i, x));
  }
  return m;
}

// K_i acts on L(Lambda)_lam by zeta^{<i, lam>} (user coordinates); the stored
// pairing is d_i <i, lam>, so the exponent is the stored value divided by d_i.
template <class Ring>
typename Ring::Scalar k_eigenvalue(const Ctx<Ring>& ctx, const Weight& lambda, int i,
                                   const MultiDegree& nu) {
  long stored = lambda[i] - ctx.dot_letter_nu(i, nu);
  long d = ctx.cartan.d(i);
  if (stored % d != 0)
    throw ConfigError("K_i exponent is fractional; weight not in the simply connected lattice");
  return ctx.zpow(stored / d);
}

// K~_i = K_i^{d_i}; eigenvalue zeta^{stored pairing}.
template <class Ring>
typename Ring::Scalar k_tilde_eigenvalue(const Ctx<Ring>& ctx, const Weight& lambda, int i,
                                         const MultiDegree& nu) {
  return ctx.zpow(lambda[i] - ctx.dot_letter_nu(i, nu));
}

// E_i = zeta_i^2 / (zeta_i - zeta_i^{-1}) epsilon_i K~_i on L_nu.
template <class Ring>
Mat<typename Ring::Scalar> e_matrix(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod,
                                    int i, const MultiDegree& nu) {
  using S = typename Ring::Scalar;
  long d = ctx.cartan.d(i);
  S den = ctx.zpow(d) - ctx.zpow(-d);
  if (is_zero(den)) throw DivisionByZero("E_i undefined: zeta_i equals its inverse");
  S c = ctx.ring.exact_div(ctx.zpow(2 * d), den) * k_tilde_eigenvalue(ctx, mod.lambda, i, nu);
  Mat<S> m = epsilon_matrix(ctx, mod, i, nu);
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index b = 0; b < m.cols(); ++b) m(a, b) = m(a, b) * c;
  return m;
}

// A graded linear map on the components of L(Lambda): one matrix per source
// degree, all sharing one degree offset.
template <class S>
struct GradedOperator {
  Eigen::VectorXi shift;                   // target degree = source + shift
  std::map<MultiDegree, Mat<S>> blocks;    // keyed by source degree

  const Mat<S>& at(const MultiDegree& nu) const {
    auto it = blocks.find(nu);
    if (it == blocks.end())
      throw WindowExceeded("graded operator: degree outside the computed window");
    return it->second;
  }
};

template <class Ring>
struct UOperators {
  std::vector<GradedOperator<typename Ring::Scalar>> theta;  // raise by i
  std::vector<GradedOperator<typename Ring::Scalar>> eps;    // lower by i
  std::vector<GradedOperator<typename Ring::Scalar>> kappa;  // diagonal K_i
};

// The generator actions on L(Lambda), assembled over the computed window.
// theta_i blocks stop one step short of the window edge so that their targets
// stay inside it.
template <class Ring>
UOperators<Ring> u_operators(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod) {
  using S = typename Ring::Scalar;
  UOperators<Ring> ops;
  ops.theta.resize(static_cast<std::size_t>(ctx.rank()));
  ops.eps.resize(static_cast<std::size_t>(ctx.rank()));
  ops.kappa.resize(static_cast<std::size_t>(ctx.rank()));
  for (int i = 0; i < ctx.rank(); ++i) {
    ops.theta[static_cast<std::size_t>(i)].shift = MultiDegree::unit(ctx.rank(), i).v;
    ops.eps[static_cast<std::size_t>(i)].shift = -MultiDegree::unit(ctx.rank(), i).v;
    ops.kappa[static_cast<std::size_t>(i)].shift = Eigen::VectorXi::Zero(ctx.rank());
    for (const auto& [nu, q] : mod.components) {
      if (nu.depth() + 1 <= mod.depth_max)
        ops.theta[static_cast<std::size_t>(i)].blocks.emplace(nu, theta_matrix(ctx, mod, i, nu));
      // when nu_i = 0 the target component is empty and the block is the
      // zero map out of L_nu
      ops.eps[static_cast<std::size_t>(i)].blocks.emplace(nu, epsilon_matrix(ctx, mod, i, nu));
      Mat<S> k = identity_matrix<S>(q.dim());
      const S ev = k_eigenvalue(ctx, mod.lambda, i, nu);
      for (Eigen::Index a = 0; a < k.rows(); ++a) k(a, a) = ev;
      ops.kappa[static_cast<std::size_t>(i)].blocks.emplace(nu, std::move(k));
    }
  }
  return ops;
}

// Images of the divided generators E_i, F_i on L(Lambda).
template <class Ring>
std::pair<std::vector<GradedOperator<typename Ring::Scalar>>,
          std::vector<GradedOperator<typename Ring::Scalar>>>
r_images(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod) {
  using S = typename Ring::Scalar;
  std::vector<GradedOperator<S>> e(static_cast<std::size_t>(ctx.rank()));
  std::vector<GradedOperator<S>> f(static_cast<std::size_t>(ctx.rank()));
  for (int i = 0; i < ctx.rank(); ++i) {
    e[static_cast<std::size_t>(i)].shift = -MultiDegree::unit(ctx.rank(), i).v;
    f[static_cast<std::size_t>(i)].shift = MultiDegree::unit(ctx.rank(), i).v;
    for (const auto& [nu, q] : mod.components) {
      if (nu[i] > 0) e[static_cast<std::size_t>(i)].blocks.emplace(nu, e_matrix(ctx, mod, i, nu));
      if (nu.depth() + 1 <= mod.depth_max)
        f[static_cast<std::size_t>(i)].blocks.emplace(nu, theta_matrix(ctx, mod, i, nu));
    }
  }
  return {std::move(e), std::move(f)};
}

// ---------------------------------------------------------------------------
// Relation and membership reports.

struct CheckReport {
  struct Line {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Line> lines;
  bool all_pass() const {
    for (const auto& ln : lines)
      if (!ln.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    lines.push_back({std::move(name), pass, std::move(detail)});
  }
};

// Is x (a homogeneous element) in the radical of S? Tested by pairing against
// the full word basis of its component.
template <class Ring>
bool in_radical_f(const Ctx<Ring>& ctx, const Lin<typename Ring::Scalar>& x) {
  if (x.empty()) return true;
  MultiDegree nu = homogeneous_content(x, ctx.rank());
  for (const Word& w : word_basis(nu)) {
    Lin<typename Ring::Scalar> probe;
    probe.emplace(w, ctx.ring.one());
    if (!is_zero(form_s_rec(ctx, x, probe))) return false;
  }
  return true;
}

// theta_i theta_j - theta_j theta_i when i.j = 0, and the quantum Serre
// element when i.j = -1 (simply-laced data only).
template <class Ring>
CheckReport serre_membership_check(const Ctx<Ring>& ctx) {
  using S = typename Ring::Scalar;
  if (!ctx.cartan.simply_laced())
    throw ConfigError("serre membership check requires a simply-laced datum");
  CheckReport report;
  const S one = ctx.ring.one();
  for (int i = 0; i < ctx.rank(); ++i) {
    for (int j = 0; j < ctx.rank(); ++j) {
      if (i == j) continue;
      Lin<S> rel;
      std::string name;
      if (ctx.dot(i, j) == 0) {
        add_term(rel, Word{i, j}, one);
        add_term(rel, Word{j, i}, S(-one));
        name = "commutator(" + std::to_string(i) + "," + std::to_string(j) + ")";
      } else if (ctx.dot(i, j) == -1) {
        add_term(rel, Word{i, i, j}, one);
        add_term(rel, Word{i, j, i}, S(-(ctx.zpow(ctx.dot(i, i) / 2) + ctx.zpow(-ctx.dot(i, i) / 2))));
        add_term(rel, Word{j, i, i}, one);
        name = "serre(" + std::to_string(i) + "," + std::to_string(j) + ")";
      } else {
        continue;
      }
      report.add(name, in_radical_f(ctx, rel));
    }
  }
  return report;
}

// Divided-power Serre elements sum_p (-1)^p theta_i^{(p)} theta_j
// theta_i^{(n-p)} with n = 1 - <i, j'>; covers the non-simply-laced data and
// reproduces the simply-laced relations when d_i = 1.
template <class Ring>
CheckReport nsl_serre_check(const Ctx<Ring>& ctx) {
  using S = typename Ring::Scalar;
  static_assert(Ring::is_field, "divided powers need a field");
  CheckReport report;
  for (int i = 0; i < ctx.rank(); ++i) {
    for (int j = 0; j < ctx.rank(); ++j) {
      if (i == j) continue;
      long d = ctx.cartan.d(i);
      if (ctx.dot(i, j) % d != 0)
        throw ConfigError("pairing <i, j'> is not integral for this datum");
      long n = 1 - ctx.dot(i, j) / d;
      Lin<S> rel;
      for (long p = 0; p <= n; ++p) {
        Word w;
        for (long a = 0; a < p; ++a) w.push_back(i);
        w.push_back(j);
        for (long a = 0; a < n - p; ++a) w.push_back(i);
        S c = ctx.ring.exact_div(
            ctx.ring.one(), ctx.ring.q_factorial(p, d) * ctx.ring.q_factorial(n - p, d));
        if (p % 2 == 1) c = -c;
        add_term(rel, w, c);
      }
      report.add("divided-serre(" + std::to_string(i) + "," + std::to_string(j) + ")",
                 in_radical_f(ctx, rel));
    }
  }
  return report;
}

// S(theta_i^a, theta_i^a) for a = 1..a_max, with the closed product formula
// prod_{p=1}^a (1 - zeta_i^{2p}) / (1 - zeta_i^2) for comparison.
template <class Ring>
std::vector<std::pair<typename Ring::Scalar, typename Ring::Scalar>> theta_power_values(
    const Ctx<Ring>& ctx, int i, int a_max) {
  using S = typename Ring::Scalar;
  static_assert(Ring::is_field, "the closed product formula divides by 1 - zeta_i^2");
  long d = ctx.cartan.d(i);
  S den = ctx.ring.one() - ctx.zpow(2 * d);
  if (is_zero(den)) throw DivisionByZero("theta power formula: 1 - zeta_i^2 vanishes");
  std::vector<std::pair<S, S>> out;
  Word w;
  S closed = ctx.ring.one();
  for (int a = 1; a <= a_max; ++a) {
    w.push_back(i);
    closed *= ctx.ring.exact_div(ctx.ring.one() - ctx.zpow(2 * d * a), den);
    out.emplace_back(form_s_rec(ctx, w, w), closed);
  }
  return out;
}

// Exact Shapovalov-type determinant of the Gram matrix on F_nu (no weight)
// or V(Lambda)_nu (weight given); works over both coefficient regimes via
// fraction-free elimination.
template <class Ring>
typename Ring::Scalar shapovalov_det(const Ctx<Ring>& ctx, const MultiDegree& nu,
                                     const std::optional<Weight>& lambda,
                                     int max_dim = 2048) {
  const auto basis = word_basis(nu);
  if (static_cast<int>(basis.size()) > max_dim)
    throw MatrixTooLarge("Gram matrix exceeds the configured dimension cap");
  auto gram = lambda ? gram_matrix_verma(ctx, *lambda, nu) : gram_matrix(ctx, nu);
  return determinant(ctx.ring, gram);
}

namespace detail {

template <class S>
bool zero_class(const QuotientBasis<S>& q, const Lin<S>& x) {
  Vec<S> v = q.project(x);
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) return false;
  return true;
}

template <class Ring>
std::string degree_label(const MultiDegree& nu) {
  std::string label = "nu=(";
  for (int k = 0; k < nu.rank(); ++k) label += (k ? "," : "") + std::to_string(nu[k]);
  return label + ")";
}

}  // namespace detail

// Generator relations of the small quantum group on L(Lambda), checked on
// every representative class in the window:
//   (a) K_j eps_i  = zeta^{<j,i'>}  eps_i  K_j
//   (b) K_j theta_i = zeta^{-<j,i'>} theta_i K_j
//   (c) eps_i theta_j - zeta^{i.j} theta_j eps_i = delta_ij (1 - K~_i^{-2})
template <class Ring>
CheckReport u_relation_check(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod) {
  using S = typename Ring::Scalar;
  CheckReport report;
  for (const auto& [nu, q] : mod.components) {
    if (q.dim() == 0 || nu.depth() + 1 > mod.depth_max) continue;
    for (int i = 0; i < ctx.rank(); ++i) {
      // (a), (b): eigenvalue identities of the grading characters.
      for (int j = 0; j < ctx.rank(); ++j) {
        long dj = ctx.cartan.d(j);
        if (ctx.dot(j, i) % dj != 0) throw ConfigError("pairing <j, i'> is not integral");
        long pair_ji = ctx.dot(j, i) / dj;
        if (nu[i] > 0) {
          MultiDegree down = nu;
          down.v[i] -= 1;
          bool ok = k_eigenvalue(ctx, mod.lambda, j, down) ==
                    ctx.zpow(pair_ji) * k_eigenvalue(ctx, mod.lambda, j, nu);
          if (!ok) report.add("K-eps(" + std::to_string(j) + "," + std::to_string(i) + ")", false);
        }
        bool ok = k_eigenvalue(ctx, mod.lambda, j, nu + MultiDegree::unit(ctx.rank(), i)) ==
                  ctx.zpow(-pair_ji) * k_eigenvalue(ctx, mod.lambda, j, nu);
        if (!ok) report.add("K-theta(" + std::to_string(j) + "," + std::to_string(i) + ")", false);
      }
      // (c) on every representative class.
      for (int j = 0; j < ctx.rank(); ++j) {
        bool pass = true;
        for (int k = 0; k < q.dim() && pass; ++k) {
          Lin<S> b;
          b.emplace(q.ambient[static_cast<std::size_t>(q.selected[static_cast<std::size_t>(k)])],
                    ctx.ring.one());
          Lin<S> r = epsilon_i(ctx, mod.lambda, i, multiply(generator(j, ctx.ring.one()), b));
          add_scaled(r, multiply(generator(j, ctx.ring.one()), epsilon_i(ctx, mod.lambda, i, b)),
                     S(-ctx.zdot(i, j)));
          if (i == j)
            add_scaled(r, b, S(-ctx.ring.bracket(mod.lambda[i] - ctx.dot_letter_nu(i, nu))));
          if (!r.empty()) {
            MultiDegree tgt = content(r.begin()->first, ctx.rank());
            pass = detail::zero_class(mod.at(tgt), r);
          }
        }
        report.add("eps-theta(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                       detail::degree_label<Ring>(nu),
                   pass);
      }
    }
  }
  return report;
}

// Applies E_i = zeta_i^2/(zeta_i - zeta_i^{-1}) eps_i K~_i to a homogeneous
// element of V(Lambda).
template <class Ring>
Lin<typename Ring::Scalar> e_apply(const Ctx<Ring>& ctx, const Weight& lambda, int i,
                                   const Lin<typename Ring::Scalar>& x) {
  using S = typename Ring::Scalar;
  if (x.empty()) return {};
  MultiDegree nu = homogeneous_content(x, ctx.rank());
  long d = ctx.cartan.d(i);
  S den = ctx.zpow(d) - ctx.zpow(-d);
  if (is_zero(den)) throw DivisionByZero("E_i undefined: zeta_i equals its inverse");
  S c = ctx.ring.exact_div(ctx.zpow(2 * d), den) * ctx.zpow(lambda[i] - ctx.dot_letter_nu(i, nu));
  Lin<S> r;
  add_scaled(r, epsilon_i(ctx, lambda, i, x), c);
  return r;
}

// Relations of the big quantum group through the images E_i, F_i = theta_i:
// the commutator relation, nilpotence E_i^l = F_i^l = 0, and the
// (divided-power) Serre relations, all as identities on L(Lambda) classes.
template <class Ring>
CheckReport ef_relation_check(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod) {
  using S = typename Ring::Scalar;
  CheckReport report;
  const int l = ctx.ring.l;
  auto project_zero = [&](const Lin<S>& r) {
    if (r.empty()) return true;
    return detail::zero_class(mod.at(content(r.begin()->first, ctx.rank())), r);
  };
  for (const auto& [nu, q] : mod.components) {
    if (q.dim() == 0) continue;
    for (int k = 0; k < q.dim(); ++k) {
      Lin<S> b;
      b.emplace(q.ambient[static_cast<std::size_t>(q.selected[static_cast<std::size_t>(k)])],
                ctx.ring.one());
      // [E_i, F_j] = delta_ij (K~_i - K~_i^{-1}) / (zeta_i - zeta_i^{-1})
      if (nu.depth() + 1 <= mod.depth_max) {
        for (int i = 0; i < ctx.rank(); ++i) {
          for (int j = 0; j < ctx.rank(); ++j) {
            Lin<S> r = e_apply(ctx, mod.lambda, i, multiply(generator(j, ctx.ring.one()), b));
            add_scaled(r, multiply(generator(j, ctx.ring.one()), e_apply(ctx, mod.lambda, i, b)),
                       S(-ctx.ring.one()));
            if (i == j) {
              long d = ctx.cartan.d(i);
              long v = mod.lambda[i] - ctx.dot_letter_nu(i, nu);
              S scalar = ctx.ring.exact_div(ctx.zpow(v) - ctx.zpow(-v),
                                            ctx.zpow(d) - ctx.zpow(-d));
              add_scaled(r, b, S(-scalar));
            }
            if (!project_zero(r))
              report.add("EF(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                             detail::degree_label<Ring>(nu),
                         false);
          }
        }
      }
      // F_i^l = 0 and E_i^l = 0 within the window.
      for (int i = 0; i < ctx.rank(); ++i) {
        if (nu.depth() + l <= mod.depth_max) {
          Lin<S> r = b;
          for (int a = 0; a < l; ++a) r = multiply(generator(i, ctx.ring.one()), r);
          if (!project_zero(r))
            report.add("F^l(" + std::to_string(i) + ") " + detail::degree_label<Ring>(nu), false);
        }
        Lin<S> r = b;
        for (int a = 0; a < l && !r.empty(); ++a) r = e_apply(ctx, mod.lambda, i, r);
        if (!project_zero(r))
          report.add("E^l(" + std::to_string(i) + ") " + detail::degree_label<Ring>(nu), false);
      }
      // Divided-power Serre relations for F and for E.
      for (int i = 0; i < ctx.rank(); ++i) {
        for (int j = 0; j < ctx.rank(); ++j) {
          if (i == j) continue;
          long d = ctx.cartan.d(i);
          long n = 1 - ctx.dot(i, j) / d;
          if (nu.depth() + n + 1 > mod.depth_max) continue;
          Lin<S> rf, re;
          for (long p = 0; p <= n; ++p) {
            S c = ctx.ring.exact_div(
                ctx.ring.one(), ctx.ring.q_factorial(p, d) * ctx.ring.q_factorial(n - p, d));
            if (p % 2 == 1) c = -c;
            Lin<S> xf = b, xe = b;
            for (long a = 0; a < n - p; ++a) xf = multiply(generator(i, ctx.ring.one()), xf);
            xf = multiply(generator(j, ctx.ring.one()), xf);
            for (long a = 0; a < p; ++a) xf = multiply(generator(i, ctx.ring.one()), xf);
            add_scaled(rf, xf, c);
            for (long a = 0; a < n - p && !xe.empty(); ++a) xe = e_apply(ctx, mod.lambda, i, xe);
            if (!xe.empty()) xe = e_apply(ctx, mod.lambda, j, xe);
            for (long a = 0; a < p && !xe.empty(); ++a) xe = e_apply(ctx, mod.lambda, i, xe);
            add_scaled(re, xe, c);
          }
          if (!project_zero(rf))
            report.add("serre-F(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                           detail::degree_label<Ring>(nu),
                       false);
          if (!project_zero(re))
            report.add("serre-E(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                           detail::degree_label<Ring>(nu),
                       false);
        }
      }
    }
  }
  if (report.lines.empty()) report.add("u-module relations", true);
  return report;
}

// Witness data for generic nondegeneracy of the forms. The Gram entries are
// universal integer polynomials in the variables q_{ij} = zeta^{i.j} and
// r_i = <Lambda, i>, so a single nonzero specialization certifies that the
// universal determinant is a nonzero polynomial. The specialization must
// avoid the degeneracy loci: substituting the A2 exponents themselves
// (q_{ij} -> q^{i.j}) is unusable, because 2(i.j) + (j.j) = 0 forces the
// quantum Serre element into the radical for every q and the determinant at
// content i + 2j vanishes identically. The exponent matrix below, with the
// weight (19, 23), was checked nondegenerate for every rank-2 content of
// depth <= 5.
inline CartanData generic_witness_cartan() {
  IntMatrix m(2, 2);
  m << 2, -5, -5, 6;
  return CartanData(m);
}

inline Weight generic_witness_weight() {
  IntVector v(2);
  v << 19, 23;
  return Weight(v);
}

// Absence of singular vectors: the joint kernel of all epsilon_i on
// L(Lambda)_nu vanishes for nu != 0.
template <class Ring>
CheckReport singular_vector_check(const Ctx<Ring>& ctx, const IrreducibleModule<Ring>& mod,
                                  int depth_max) {
  using S = typename Ring::Scalar;
  CheckReport report;
  for (const auto& [nu, q] : mod.components) {
    if (nu.is_zero() || nu.depth() > depth_max || q.dim() == 0) continue;
    Eigen::Index rows = 0;
    std::vector<Mat<S>> blocks;
    for (int i = 0; i < ctx.rank(); ++i) {
      blocks.push_back(epsilon_matrix(ctx, mod, i, nu));
      rows += blocks.back().rows();
    }
    Mat<S> stacked = zero_matrix<S>(rows, q.dim());
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
      if (b.rows() > 0) stacked.middleRows(at, b.rows()) = b;
      at += b.rows();
    }
    bool pass = rank(ctx.ring, stacked) == q.dim();
    std::string label = "nu=(";
    for (int k = 0; k < nu.rank(); ++k) label += (k ? "," : "") + std::to_string(nu[k]);
    label += ")";
    report.add("no-singular-vectors " + label, pass);
  }
  return report;
}

}  // namespace qsh
