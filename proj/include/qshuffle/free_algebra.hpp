#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "qshuffle/cartan.hpp"
#include "qshuffle/linalg.hpp"
#include "qshuffle/rings.hpp"
#include "qshuffle/word.hpp"

namespace qsh {

// Run-scoped context: the coefficient ring and the Cartan datum. All algebra
// operations are pure functions of (ctx, arguments).
template <class Ring>
struct Ctx {
  using S = typename Ring::Scalar;

  Ring ring;
  CartanData cartan;

  S zpow(long e) const { return ring.zeta_pow(e); }
  S zdot(int i, int j) const { return ring.zeta_pow(cartan.dot(i, j)); }
  long dot(int i, int j) const { return cartan.dot(i, j); }
  int rank() const { return cartan.rank(); }

  long dot_letter_nu(int i, const MultiDegree& nu) const {
    long s = 0;
    for (int j = 0; j < cartan.rank(); ++j) s += cartan.dot(i, j) * nu[j];
    return s;
  }
};

inline Ctx<CycloField> cyclo_ctx(int l, CartanData cartan) {
  return Ctx<CycloField>{CycloField(l), std::move(cartan)};
}

inline Ctx<LaurentRing> generic_ctx(CartanData cartan) {
  return Ctx<LaurentRing>{LaurentRing{}, std::move(cartan)};
}

// Maximum word length for which permutation sums are enumerated directly.
inline constexpr int kPermutationGuard = 9;

// ---------------------------------------------------------------------------
// Permutations. A permutation pi is stored as the map "target position ->
// source position": applying pi to a sequence K yields
//     pi(K)[p] = K[pi[p]],
// which matches the convention used for tau(K) throughout.

using Permutation = std::vector<int>;

inline Word apply_permutation(const Word& k, const Permutation& pi) {
  Word r(k.size());
  for (std::size_t p = 0; p < k.size(); ++p) r[p] = k[static_cast<std::size_t>(pi[p])];
  return r;
}

inline Permutation inverse_permutation(const Permutation& pi) {
  Permutation inv(pi.size());
  for (std::size_t p = 0; p < pi.size(); ++p) inv[static_cast<std::size_t>(pi[p])] = static_cast<int>(p);
  return inv;
}

// Twisting number in terms of the source->target matching m = pi^{-1}:
// each pair of letters whose relative order is reversed contributes
// zeta^{K[a].K[b]}. This normalization is pinned by the requirement that the
// permutation sum for S agree with the recursive evaluation; see the
// dual-algorithm tests.
template <class Ring>
typename Ring::Scalar twist_by_matching(const Ctx<Ring>& ctx, const Word& k,
                                        const Permutation& m) {
  if (k.size() != m.size()) throw SizeMismatch("twisting number: size mismatch");
  long e = 0;
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b)
      if (m[a] > m[b]) e += ctx.dot(k[a], k[b]);
  return ctx.zpow(e);
}

// zeta(K; tau) for tau in the target->source convention above.
template <class Ring>
typename Ring::Scalar twisting_number(const Ctx<Ring>& ctx, const Word& k,
                                      const Permutation& tau) {
  return twist_by_matching(ctx, k, inverse_permutation(tau));
}

// ---------------------------------------------------------------------------
// Free algebra.

template <class S>
Lin<S> unit_element(const S& one) {
  Lin<S> x;
  x.emplace(Word{}, one);
  return x;
}

template <class S>
Lin<S> generator(int i, const S& one) {
  Lin<S> x;
  x.emplace(Word{i}, one);
  return x;
}

// Free multiplication: concatenation of words, extended bilinearly.
template <class S>
Lin<S> multiply(const Lin<S>& x, const Lin<S>& y) {
  Lin<S> r;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) add_term(r, concat(wx, wy), S(cx * cy));
  return r;
}

// Twisted product on m-fold tensors (slots multiply componentwise, with
// zeta^{sum_{j<i} |x_i|.|y_j|}). Shared by the coproduct morphism tests, the
// tensor modules and the Hochschild machinery.
template <class Ring>
LinT<typename Ring::Scalar> twisted_tensor_multiply(const Ctx<Ring>& ctx,
                                                    const LinT<typename Ring::Scalar>& x,
                                                    const LinT<typename Ring::Scalar>& y) {
  using S = typename Ring::Scalar;
  LinT<S> r;
  for (const auto& [tx, cx] : x) {
    std::vector<MultiDegree> degx;
    degx.reserve(tx.size());
    for (const Word& w : tx) degx.push_back(content(w, ctx.rank()));
    for (const auto& [ty, cy] : y) {
      if (ty.size() != tx.size()) throw SizeMismatch("tensor product: arity mismatch");
      long e = 0;
      for (std::size_t i = 0; i < tx.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) e += dot_product(ctx.cartan, degx[i], content(ty[j], ctx.rank()));
      WordTuple t(tx.size());
      for (std::size_t p = 0; p < tx.size(); ++p) t[p] = concat(tx[p], ty[p]);
      add_term(r, t, S(cx * cy * ctx.zpow(e)));
    }
  }
  return r;
}

// Iterated coproduct Delta^{(n)} of a single word: the sum over ordered
// splittings of the letter positions into n blocks, each block keeping its
// internal order, weighted by the crossing twists.
template <class Ring>
LinT<typename Ring::Scalar> iterated_coproduct_word(const Ctx<Ring>& ctx, const Word& k, int n) {
  using S = typename Ring::Scalar;
  if (n < 1) throw SizeMismatch("iterated coproduct needs n >= 1");
  const int N = static_cast<int>(k.size());
  LinT<S> out;
  std::vector<int> slot(static_cast<std::size_t>(N), 0);
  while (true) {
    long e = 0;
    for (int s = 0; s < N; ++s)
      for (int t = 0; t < s; ++t)
        if (slot[t] > slot[s]) e += ctx.dot(k[s], k[t]);  // letter s jumps left over t
    WordTuple tup(static_cast<std::size_t>(n));
    for (int p = 0; p < N; ++p) tup[static_cast<std::size_t>(slot[p])].push_back(k[p]);
    add_term(out, tup, ctx.zpow(e));
    int p = N - 1;
    while (p >= 0 && slot[p] == n - 1) slot[p--] = 0;
    if (p < 0) break;
    ++slot[p];
  }
  return out;
}

template <class Ring>
LinT<typename Ring::Scalar> iterated_coproduct(const Ctx<Ring>& ctx,
                                               const Lin<typename Ring::Scalar>& x, int n) {
  using S = typename Ring::Scalar;
  LinT<S> r;
  for (const auto& [w, c] : x) add_scaled(r, iterated_coproduct_word(ctx, w, n), c);
  return r;
}

template <class Ring>
LinT<typename Ring::Scalar> coproduct(const Ctx<Ring>& ctx, const Lin<typename Ring::Scalar>& x) {
  return iterated_coproduct(ctx, x, 2);
}

// Projection of a tensor element to (F^+)^{otimes n}: drop terms with an
// empty slot.
template <class S>
LinT<S> positive_part(const LinT<S>& x) {
  LinT<S> r;
  for (const auto& [t, c] : x) {
    bool keep = true;
    for (const Word& w : t)
      if (w.empty()) {
        keep = false;
        break;
      }
    if (keep) r.emplace(t, c);
  }
  return r;
}

// delta_i: the unique operators with delta_i(1) = 0, delta_i(theta_j) =
// [i == j], and the twisted Leibniz rule.
template <class Ring>
Lin<typename Ring::Scalar> delta_i(const Ctx<Ring>& ctx, int i,
                                   const Lin<typename Ring::Scalar>& x) {
  using S = typename Ring::Scalar;
  Lin<S> r;
  for (const auto& [w, c] : x) {
    long prefix = 0;  // (w_1 + ... + w_{p-1}) . i
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == i) {
        Word rest = w;
        rest.erase(rest.begin() + static_cast<long>(p));
        add_term(r, rest, S(c * ctx.zpow(prefix)));
      }
      prefix += ctx.dot(w[p], i);
    }
  }
  return r;
}

// S(theta_K, theta_K') as the explicit permutation sum: the independent,
// factorial-cost oracle. Guarded by kPermutationGuard.
template <class Ring>
typename Ring::Scalar form_s_perm(const Ctx<Ring>& ctx, const Word& k, const Word& kp) {
  using S = typename Ring::Scalar;
  if (k.size() != kp.size()) return ctx.ring.zero();
  if (content(k, ctx.rank()) != content(kp, ctx.rank())) return ctx.ring.zero();
  const int N = static_cast<int>(k.size());
  if (N > kPermutationGuard)
    throw EnumerationGuard("permutation sum beyond depth guard");
  S total = ctx.ring.zero();
  Permutation pi(static_cast<std::size_t>(N));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool match = true;
    for (int p = 0; p < N; ++p)
      if (k[static_cast<std::size_t>(pi[p])] != kp[static_cast<std::size_t>(p)]) {
        match = false;
        break;
      }
    if (match) total += twisting_number(ctx, k, pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

// S computed by peeling leading letters through delta_i; the production path.
template <class Ring>
typename Ring::Scalar form_s_rec(const Ctx<Ring>& ctx, const Lin<typename Ring::Scalar>& x,
                                 const Lin<typename Ring::Scalar>& y) {
  using S = typename Ring::Scalar;
  S total = ctx.ring.zero();
  for (const auto& [wx, cx] : x) {
    Lin<S> cur = y;
    for (int letter : wx) {
      if (cur.empty()) break;
      cur = delta_i(ctx, letter, cur);
    }
    auto it = cur.find(Word{});
    if (it != cur.end()) total += cx * it->second;
  }
  return total;
}

template <class Ring>
typename Ring::Scalar form_s_rec(const Ctx<Ring>& ctx, const Word& k, const Word& kp) {
  using S = typename Ring::Scalar;
  Lin<S> x, y;
  x.emplace(k, ctx.ring.one());
  y.emplace(kp, ctx.ring.one());
  return form_s_rec(ctx, x, y);
}

// Gram matrix of S on the lexicographic word basis of F_nu.
template <class Ring>
Mat<typename Ring::Scalar> gram_matrix(const Ctx<Ring>& ctx, const MultiDegree& nu,
                                       bool use_permutation_sum = false) {
  using S = typename Ring::Scalar;
  const auto basis = word_basis(nu);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  Mat<S> g(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      g(a, b) = use_permutation_sum ? form_s_perm(ctx, basis[a], basis[b])
                                    : form_s_rec(ctx, basis[a], basis[b]);
  return g;
}

// ---------------------------------------------------------------------------
// Dual algebra F*. Elements are stored against the dual word basis; the
// product is dual to the graded coproduct components.

// Coefficient of theta_A (x) theta_B in Delta(theta_W).
template <class Ring>
typename Ring::Scalar coproduct_coefficient(const Ctx<Ring>& ctx, const Word& w, const Word& a,
                                            const Word& b) {
  using S = typename Ring::Scalar;
  if (a.size() + b.size() != w.size()) return ctx.ring.zero();
  S total = ctx.ring.zero();
  const int N = static_cast<int>(w.size());
  const int Na = static_cast<int>(a.size());
  // Choose the positions going to the left slot.
  std::vector<int> pick(static_cast<std::size_t>(Na));
  std::function<void(int, int, long)> rec = [&](int idx, int from, long twist) {
    if (idx == Na) {
      Word rest;
      std::vector<bool> used(static_cast<std::size_t>(N), false);
      for (int p : pick) used[static_cast<std::size_t>(p)] = true;
      for (int p = 0; p < N; ++p)
        if (!used[static_cast<std::size_t>(p)]) rest.push_back(w[static_cast<std::size_t>(p)]);
      if (rest == b) total += ctx.zpow(twist);
      return;
    }
    for (int p = from; p < N; ++p) {
      if (w[static_cast<std::size_t>(p)] != a[static_cast<std::size_t>(idx)]) continue;
      long extra = 0;  // crossings with complement letters left of p
      std::vector<bool> used(static_cast<std::size_t>(N), false);
      for (int q = 0; q < idx; ++q) used[static_cast<std::size_t>(pick[q])] = true;
      for (int t = 0; t < p; ++t)
        if (!used[static_cast<std::size_t>(t)])
          extra += ctx.dot(w[static_cast<std::size_t>(p)], w[static_cast<std::size_t>(t)]);
      pick[static_cast<std::size_t>(idx)] = p;
      rec(idx + 1, p + 1, twist + extra);
    }
  };
  rec(0, 0, 0);
  return total;
}

// Product on F*: <phi psi, x> = <phi (x) psi, Delta(x)>.
template <class Ring>
Lin<typename Ring::Scalar> dual_multiply(const Ctx<Ring>& ctx,
                                         const Lin<typename Ring::Scalar>& phi,
                                         const Lin<typename Ring::Scalar>& psi) {
  using S = typename Ring::Scalar;
  if (phi.empty() || psi.empty()) return {};
  MultiDegree nu = homogeneous_content(phi, ctx.rank());
  MultiDegree mu = homogeneous_content(psi, ctx.rank());
  Lin<S> out;
  for (const Word& w : word_basis(nu + mu)) {
    S c = ctx.ring.zero();
    for (const auto& [wa, ca] : phi)
      for (const auto& [wb, cb] : psi)
        c += ca * cb * coproduct_coefficient(ctx, w, wa, wb);
    add_term(out, w, c);
  }
  return out;
}

// The algebra map F -> F* induced by the form: x -> S(x, .).
template <class Ring>
Lin<typename Ring::Scalar> s_map(const Ctx<Ring>& ctx, const Lin<typename Ring::Scalar>& x) {
  using S = typename Ring::Scalar;
  Lin<S> out;
  for (const auto& [w, c] : x) {
    for (const Word& t : word_basis(content(w, ctx.rank()))) {
      add_term(out, t, S(c * form_s_rec(ctx, w, t)));
    }
  }
  return out;
}

}  // namespace qsh
