#pragma once

#include <set>
#include <vector>

#include "qshuffle/free_algebra.hpp"

namespace qsh {

// Verma module V(Lambda). As a graded space it is the free algebra itself:
// a word w stands for theta_{w_1} ... theta_{w_N} v_Lambda, and its X-degree
// is Lambda - lambda_{content(w)}. The highest-weight vector is the empty
// word.
//
// Several of the defining formulas consume a monomial from its rightmost
// letter: where the display order theta_{i_N} ... theta_{i_1} v appears, the
// stored word (w_1, ..., w_N) is read as i_k = w_{N+1-k}. The agreement
// between the two coaction algorithms pins this convention.

template <class Ring>
Weight x_degree(const Ctx<Ring>& ctx, const Weight& lambda, const MultiDegree& nu) {
  return lambda - lambda_nu(ctx.cartan, nu);
}

// Free left action of the algebra; plain concatenation.
template <class S>
Lin<S> act_theta(const Lin<S>& x, const Lin<S>& m) {
  return multiply(x, m);
}

// epsilon_i: the adjoint of theta_i with respect to S_Lambda.
template <class Ring>
Lin<typename Ring::Scalar> epsilon_i(const Ctx<Ring>& ctx, const Weight& lambda, int i,
                                     const Lin<typename Ring::Scalar>& m) {
  using S = typename Ring::Scalar;
  Lin<S> r;
  for (const auto& [w, c] : m) {
    long prefix = 0;  // i . (w_1 + ... + w_{p-1})
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == i) {
        long suffix = 0;  // i . (w_{p+1} + ... + w_N)
        for (std::size_t a = p + 1; a < w.size(); ++a) suffix += ctx.dot(i, w[a]);
        Word rest = w;
        rest.erase(rest.begin() + static_cast<long>(p));
        add_term(r, rest, S(c * ctx.zpow(prefix) * ctx.ring.bracket(lambda[i] - suffix)));
      }
      prefix += ctx.dot(i, w[p]);
    }
  }
  return r;
}

// Contravariant form via epsilon-peeling; the production algorithm.
template <class Ring>
typename Ring::Scalar form_s_lambda_rec(const Ctx<Ring>& ctx, const Weight& lambda,
                                        const Lin<typename Ring::Scalar>& x,
                                        const Lin<typename Ring::Scalar>& y) {
  using S = typename Ring::Scalar;
  S total = ctx.ring.zero();
  for (const auto& [wx, cx] : x) {
    Lin<S> cur = y;
    for (int letter : wx) {
      if (cur.empty()) break;
      cur = epsilon_i(ctx, lambda, letter, cur);
    }
    auto it = cur.find(Word{});
    if (it != cur.end()) total += cx * it->second;
  }
  return total;
}

template <class Ring>
typename Ring::Scalar form_s_lambda_rec(const Ctx<Ring>& ctx, const Weight& lambda, const Word& k,
                                        const Word& kp) {
  using S = typename Ring::Scalar;
  Lin<S> x, y;
  x.emplace(k, ctx.ring.one());
  y.emplace(kp, ctx.ring.one());
  return form_s_lambda_rec(ctx, lambda, x, y);
}

// Contravariant form as the explicit sum over letter matchings: the
// independent oracle. For a matching m (source position a of K lands at
// target position m(a) of K'), the weight factor of letter a subtracts the
// letters of K consumed after a but landing to the right of a.
template <class Ring>
typename Ring::Scalar form_s_lambda_perm(const Ctx<Ring>& ctx, const Weight& lambda,
                                         const Word& k, const Word& kp) {
  using S = typename Ring::Scalar;
  if (k.size() != kp.size()) return ctx.ring.zero();
  if (content(k, ctx.rank()) != content(kp, ctx.rank())) return ctx.ring.zero();
  const int N = static_cast<int>(k.size());
  if (N > kPermutationGuard)
    throw EnumerationGuard("permutation sum beyond depth guard");
  S total = ctx.ring.zero();
  Permutation m(static_cast<std::size_t>(N));
  std::iota(m.begin(), m.end(), 0);
  do {
    bool match = true;
    for (int a = 0; a < N; ++a)
      if (k[static_cast<std::size_t>(a)] != kp[static_cast<std::size_t>(m[a])]) {
        match = false;
        break;
      }
    if (!match) continue;
    S weight_factor = ctx.ring.one();
    for (int a = 0; a < N && !is_zero(weight_factor); ++a) {
      long drop = 0;
      for (int b = a + 1; b < N; ++b)
        if (m[b] > m[a]) drop += ctx.dot(k[static_cast<std::size_t>(a)], k[static_cast<std::size_t>(b)]);
      weight_factor *= ctx.ring.bracket(lambda[k[static_cast<std::size_t>(a)]] - drop);
    }
    total += twist_by_matching(ctx, k, m) * weight_factor;
  } while (std::next_permutation(m.begin(), m.end()));
  return total;
}

// ---------------------------------------------------------------------------
// Coaction Delta_Lambda : V(Lambda) -> F (x) V(Lambda).
// Elements of the target are stored as 2-slot tuples (algebra word, module
// word).

// t_i(x (x) y) = theta_i x (x) y - zeta^{i.nu - 2<lam,i>} x theta_i (x) y
//              + zeta^{i.nu} x (x) theta_i y,  x in F_nu, y in V(Lambda)_lam.
template <class Ring>
LinT<typename Ring::Scalar> t_operator(const Ctx<Ring>& ctx, const Weight& lambda, int i,
                                       const LinT<typename Ring::Scalar>& elt) {
  using S = typename Ring::Scalar;
  LinT<S> r;
  for (const auto& [t, c] : elt) {
    const Word& x = t[0];
    const Word& y = t[1];
    long inu = 0;
    for (int a : x) inu += ctx.dot(i, a);
    long lam_i = lambda[i] - ctx.dot_letter_nu(i, content(y, ctx.rank()));
    Word xl = x;
    xl.insert(xl.begin(), i);
    add_term(r, WordTuple{xl, y}, c);
    Word xr = x;
    xr.push_back(i);
    add_term(r, WordTuple{xr, y}, S(-(c * ctx.zpow(inu - 2 * lam_i))));
    Word yi = y;
    yi.insert(yi.begin(), i);
    add_term(r, WordTuple{x, yi}, S(c * ctx.zpow(inu)));
  }
  return r;
}

// Coaction by its defining formula: the word is consumed from its rightmost
// letter, and each prefix is pushed through the t-operators.
template <class Ring>
LinT<typename Ring::Scalar> coaction_word(const Ctx<Ring>& ctx, const Weight& lambda,
                                          const Word& w) {
  using S = typename Ring::Scalar;
  const int N = static_cast<int>(w.size());
  auto letter = [&](int k) { return w[static_cast<std::size_t>(N - k)]; };  // i_k, 1-based
  LinT<S> out;
  add_term(out, WordTuple{Word{}, w}, ctx.ring.one());
  for (int j = 1; j <= N; ++j) {
    long drop = 0;  // i_j . (i_1 + ... + i_{j-1})
    for (int b = 1; b < j; ++b) drop += ctx.dot(letter(j), letter(b));
    S coeff = ctx.ring.bracket(lambda[letter(j)] - drop);
    if (is_zero(coeff)) continue;
    Word tail(w.begin() + (N - j + 1), w.end());  // theta_{i_{j-1}} ... theta_{i_1} v
    LinT<S> cur;
    add_term(cur, WordTuple{Word{letter(j)}, tail}, coeff);
    for (int kk = j + 1; kk <= N; ++kk) cur = t_operator(ctx, lambda, letter(kk), cur);
    for (const auto& [t, c] : cur) add_term(out, t, c);
  }
  return out;
}

template <class Ring>
LinT<typename Ring::Scalar> coaction(const Ctx<Ring>& ctx, const Weight& lambda,
                                     const Lin<typename Ring::Scalar>& m) {
  using S = typename Ring::Scalar;
  LinT<S> r;
  for (const auto& [w, c] : m) add_scaled(r, coaction_word(ctx, lambda, w), c);
  return r;
}

// ---------------------------------------------------------------------------
// Quantum commutators.

// ad_{theta_i, lam}(x) = theta_i x - zeta^{i.nu - 2<lam,i>} x theta_i for
// homogeneous x of degree nu.
template <class Ring>
Lin<typename Ring::Scalar> ad_theta(const Ctx<Ring>& ctx, int i, const Weight& lam,
                                    const Lin<typename Ring::Scalar>& x) {
  using S = typename Ring::Scalar;
  if (x.empty()) return {};
  MultiDegree nu = homogeneous_content(x, ctx.rank());
  long e = ctx.dot_letter_nu(i, nu) - 2 * lam[i];
  Lin<S> r;
  for (const auto& [w, c] : x) {
    Word left = w;
    left.insert(left.begin(), i);
    add_term(r, left, c);
    Word right = w;
    right.push_back(i);
    add_term(r, right, S(-(c * ctx.zpow(e))));
  }
  return r;
}

// Residual of the delta/ad commutation identity; zero for all homogeneous x.
template <class Ring>
Lin<typename Ring::Scalar> adjdelta_residual(const Ctx<Ring>& ctx, int i, int j,
                                             const Weight& lam,
                                             const Lin<typename Ring::Scalar>& x) {
  using S = typename Ring::Scalar;
  if (x.empty()) return {};
  MultiDegree nu = homogeneous_content(x, ctx.rank());
  Lin<S> lhs = delta_i(ctx, i, ad_theta(ctx, j, lam, x));
  Lin<S> rhs = ad_theta(ctx, j, lam, delta_i(ctx, i, x));
  add_scaled(lhs, rhs, S(-ctx.zdot(i, j)));
  if (i == j) {
    S c = ctx.ring.bracket(lam[i] - ctx.dot_letter_nu(i, nu));
    add_scaled(lhs, x, S(-c));
  }
  return lhs;
}

// [theta_{I,Q,Lambda}]: the iterated weighted commutator attached to a
// non-empty subset Q of {1..N} (indices into the display order
// theta_{i_N} ... theta_{i_1} v, so i_k is stored letter w_{N+1-k}).
template <class Ring>
Lin<typename Ring::Scalar> quantum_commutator(const Ctx<Ring>& ctx, const Word& w,
                                              const std::set<int>& q, const Weight& lambda) {
  using S = typename Ring::Scalar;
  const int N = static_cast<int>(w.size());
  if (q.empty()) throw EmptySubset("quantum commutator needs a non-empty subset");
  for (int j : q)
    if (j < 1 || j > N) throw SizeMismatch("subset entry out of range");
  auto letter = [&](int k) { return w[static_cast<std::size_t>(N - k)]; };

  if (q.size() == 1) {
    int j = *q.begin();
    long e = 0;
    for (int k = j + 1; k <= N; ++k) e += ctx.dot(letter(j), letter(k));
    Lin<S> r;
    add_term(r, Word{letter(j)}, ctx.zpow(e));
    return r;
  }

  std::vector<int> js(q.begin(), q.end());  // j_0 < j_1 < ... < j_l
  const int l = static_cast<int>(js.size()) - 1;

  // tau_Q: target sequence is (j_l, ..., j_0) followed by the remaining
  // indices in descending order; positions refer to the sequence
  // I = (i_N, ..., i_1), whose p-th entry is the stored letter w_p.
  std::vector<int> target;
  for (int a = l; a >= 0; --a) target.push_back(js[static_cast<std::size_t>(a)]);
  for (int k = N; k >= 1; --k)
    if (!q.count(k)) target.push_back(k);
  Permutation tau(static_cast<std::size_t>(N));
  for (int p = 0; p < N; ++p) tau[static_cast<std::size_t>(p)] = N - target[static_cast<std::size_t>(p)];

  // lambda_a drops every letter consumed into the commutator so far,
  // j_0 included: the weight tracks the module-side factor only. (Leaving
  // j_0 in the sum breaks the agreement with the coaction.)
  Lin<S> acc;
  add_term(acc, Word{letter(js[0])}, ctx.ring.one());
  for (int a = 1; a <= l; ++a) {
    MultiDegree sum(ctx.rank());
    for (int k = 1; k < js[static_cast<std::size_t>(a)]; ++k) {
      bool excluded = false;
      for (int b = 0; b < a; ++b)
        if (k == js[static_cast<std::size_t>(b)]) {
          excluded = true;
          break;
        }
      if (!excluded) ++sum.v[letter(k)];
    }
    Weight lam_a = lambda - lambda_nu(ctx.cartan, sum);
    acc = ad_theta(ctx, letter(js[static_cast<std::size_t>(a)]), lam_a, acc);
  }
  Lin<S> r;
  add_scaled(r, acc, twisting_number(ctx, w, tau));
  return r;
}

// Coaction assembled from quantum commutators; must agree with coaction().
template <class Ring>
LinT<typename Ring::Scalar> coaction_via_commutators(const Ctx<Ring>& ctx, const Weight& lambda,
                                                     const Lin<typename Ring::Scalar>& m) {
  using S = typename Ring::Scalar;
  LinT<S> out;
  for (const auto& [w, cw] : m) {
    const int N = static_cast<int>(w.size());
    auto letter = [&](int k) { return w[static_cast<std::size_t>(N - k)]; };
    add_term(out, WordTuple{Word{}, w}, cw);
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
      std::set<int> q;
      for (int k = 1; k <= N; ++k)
        if (mask & (1u << (k - 1))) q.insert(k);
      int jq = *q.begin();
      long drop = 0;
      for (int b = 1; b < jq; ++b) drop += ctx.dot(letter(jq), letter(b));
      S coeff = cw * ctx.ring.bracket(lambda[letter(jq)] - drop);
      if (is_zero(coeff)) continue;
      Lin<S> com = quantum_commutator(ctx, w, q, lambda);
      Word rest;
      for (int p = 0; p < N; ++p)
        if (!q.count(N - p)) rest.push_back(w[static_cast<std::size_t>(p)]);
      for (const auto& [cw2, cc] : com) add_term(out, WordTuple{cw2, rest}, S(coeff * cc));
    }
  }
  return out;
}

}  // namespace qsh
