#pragma once

#include <vector>

#include "qshuffle/verma.hpp"

namespace qsh {

// Tensor products V(Lambda_0) (x) ... (x) V(Lambda_{n-1}) as modules over the
// algebra: the n-fold twisted tensor algebra acts slotwise with the sign rule
//   zeta^{-sum_{j<i} <lam_j, nu_i>},
// lam_j being the current X-degree of slot j and nu_i the degree of the i-th
// acting factor; the algebra itself acts through the iterated coproduct.

// Action of one n-tuple of homogeneous algebra words on one module tuple.
template <class Ring>
void tensor_action_term(const Ctx<Ring>& ctx, const std::vector<Weight>& weights,
                        const WordTuple& u, const typename Ring::Scalar& cu,
                        const WordTuple& x, const typename Ring::Scalar& cx,
                        LinT<typename Ring::Scalar>& out) {
  using S = typename Ring::Scalar;
  const std::size_t n = weights.size();
  if (u.size() != n || x.size() != n) throw SizeMismatch("tensor action: arity mismatch");
  long e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    MultiDegree nu_i = content(u[i], ctx.rank());
    if (nu_i.is_zero()) continue;
    for (std::size_t j = 0; j < i; ++j) {
      Weight lam_j = x_degree(ctx, weights[j], content(x[j], ctx.rank()));
      e -= pairing(lam_j, nu_i);
    }
  }
  WordTuple t(n);
  for (std::size_t p = 0; p < n; ++p) t[p] = concat(u[p], x[p]);
  add_term(out, t, S(cu * cx * ctx.zpow(e)));
}

// Action of an element of the n-fold tensor algebra.
template <class Ring>
LinT<typename Ring::Scalar> tensor_algebra_action(const Ctx<Ring>& ctx,
                                                  const std::vector<Weight>& weights,
                                                  const LinT<typename Ring::Scalar>& u,
                                                  const LinT<typename Ring::Scalar>& x) {
  using S = typename Ring::Scalar;
  LinT<S> out;
  for (const auto& [tu, cu] : u)
    for (const auto& [tx, cx] : x) tensor_action_term(ctx, weights, tu, cu, tx, cx, out);
  return out;
}

// Module structure over the algebra itself, through Delta^{(n)}.
template <class Ring>
LinT<typename Ring::Scalar> f_action(const Ctx<Ring>& ctx, const std::vector<Weight>& weights,
                                     const Lin<typename Ring::Scalar>& x,
                                     const LinT<typename Ring::Scalar>& m) {
  return tensor_algebra_action(ctx, weights, iterated_coproduct(ctx, x, static_cast<int>(weights.size())), m);
}

// Product form on F^{(x) m} (x) V(Lambda_0) (x) ... (x) V(Lambda_{n-1}):
// the plain product of the factor forms.
template <class Ring>
typename Ring::Scalar form_s_tensor(const Ctx<Ring>& ctx, int m,
                                    const std::vector<Weight>& weights, const WordTuple& a,
                                    const WordTuple& b) {
  using S = typename Ring::Scalar;
  const std::size_t slots = static_cast<std::size_t>(m) + weights.size();
  if (a.size() != slots || b.size() != slots) throw SizeMismatch("tensor form: arity mismatch");
  S r = ctx.ring.one();
  for (std::size_t s = 0; s < slots && !is_zero(r); ++s) {
    if (s < static_cast<std::size_t>(m))
      r *= form_s_rec(ctx, a[s], b[s]);
    else
      r *= form_s_lambda_rec(ctx, weights[s - static_cast<std::size_t>(m)], a[s], b[s]);
  }
  return r;
}

template <class Ring>
typename Ring::Scalar form_s_tensor(const Ctx<Ring>& ctx, int m,
                                    const std::vector<Weight>& weights,
                                    const LinT<typename Ring::Scalar>& a,
                                    const LinT<typename Ring::Scalar>& b) {
  using S = typename Ring::Scalar;
  S r = ctx.ring.zero();
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) r += ca * cb * form_s_tensor(ctx, m, weights, ta, tb);
  return r;
}

}  // namespace qsh
