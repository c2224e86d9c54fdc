#pragma once

#include <map>
#include <vector>

#include "qshuffle/hochschild.hpp"

namespace qsh {

// The form-induced morphism from the bar complex of F with Verma tensor
// coefficients to the bar complex of the dual algebra with dual coefficients.
// Dual-side data is expressed against the distinguished dual word bases, so
// chains on both sides share the same index sets; the dual differential uses
// the coproduct (for merges) and the coaction (for the module action).

template <class Ring>
class DualSide {
 public:
  DualSide(const Ctx<Ring>& ctx, std::vector<Weight> weights)
      : ctx_(ctx), weights_(std::move(weights)) {
    cache_.resize(weights_.size());
  }

  using S = typename Ring::Scalar;

  // Coefficient of theta_K (x) (module word M) in Delta_Lambda(target word).
  const LinT<S>& coaction_terms(std::size_t slot, const Word& target) {
    auto& memo = cache_[slot];
    auto it = memo.find(target);
    if (it != memo.end()) return it->second;
    auto r = memo.emplace(target, coaction_word(ctx_, weights_[slot], target));
    return r.first->second;
  }

  // Dual bar differential C^{-r}_{F*} -> C^{-r+1}_{F*} on dual word bases.
  Mat<S> boundary(const ChainBasis& src, const ChainBasis& dst) {
    const int r = src.r;
    const int n = src.n;
    Mat<S> d = zero_matrix<S>(dst.dim(), src.dim());
    for (int col = 0; col < src.dim(); ++col) {
      const WordTuple& x = src.tuples[static_cast<std::size_t>(col)];
      // merge terms: the dual product of adjacent factors
      for (int p = 1; p <= r - 1; ++p) {
        const int s1 = r - p - 1, s2 = r - p;
        const Word& left = x[static_cast<std::size_t>(s1)];
        const Word& right = x[static_cast<std::size_t>(s2)];
        const S sign = (p % 2 == 1) ? S(-ctx_.ring.one()) : ctx_.ring.one();
        MultiDegree merged = content(left, ctx_.rank()) + content(right, ctx_.rank());
        for (const Word& w : word_basis(merged)) {
          S c = coproduct_coefficient(ctx_, w, left, right);
          if (is_zero(c)) continue;
          WordTuple u;
          u.reserve(x.size() - 1);
          for (int s = 0; s < s1; ++s) u.push_back(x[static_cast<std::size_t>(s)]);
          u.push_back(w);
          for (std::size_t s = static_cast<std::size_t>(s2 + 1); s < x.size(); ++s)
            u.push_back(x[s]);
          auto it = dst.index.find(u);
          if (it == dst.index.end()) throw Error("dual boundary image outside target basis");
          d(it->second, col) += sign * c;
        }
      }
      // module term: the dual action of the innermost factor
      if (r >= 1) {
        const Word& a1 = x[static_cast<std::size_t>(r - 1)];
        std::vector<Word> mods(x.begin() + r, x.end());
        accumulate_dual_action(a1, mods, x, r, dst, col, d);
      }
    }
    return d;
  }

 private:
  // Splits a1 into n consecutive blocks; block t acts on module slot t
  // through the coaction pairing, with the sign rule on the dual gradings.
  void accumulate_dual_action(const Word& a1, const std::vector<Word>& mods, const WordTuple& x,
                              int r, const ChainBasis& dst, int col, Mat<S>& d) {
    const std::size_t n = weights_.size();
    std::vector<std::size_t> cuts(n + 1, 0);
    cuts[n] = a1.size();
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t t, std::size_t from) {
      if (t + 1 == n) {
        apply_split(a1, mods, x, r, dst, col, cuts, d);
        return;
      }
      for (std::size_t c = from; c <= a1.size(); ++c) {
        cuts[t + 1] = c;
        rec(t + 1, c);
      }
    };
    if (n == 1) {
      apply_split(a1, mods, x, r, dst, col, cuts, d);
    } else {
      rec(0, 0);
    }
  }

  void apply_split(const Word& a1, const std::vector<Word>& mods, const WordTuple& x, int r,
                   const ChainBasis& dst, int col, const std::vector<std::size_t>& cuts,
                   Mat<S>& d) {
    const std::size_t n = weights_.size();
    std::vector<Word> blocks(n);
    for (std::size_t t = 0; t < n; ++t)
      blocks[t] = Word(a1.begin() + static_cast<long>(cuts[t]),
                       a1.begin() + static_cast<long>(cuts[t + 1]));
    // sign rule: zeta^{-sum_{j<i} <lam(M_j), content(K_i)>}
    long e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      MultiDegree nu_i = content(blocks[i], ctx_.rank());
      if (nu_i.is_zero()) continue;
      for (std::size_t j = 0; j < i; ++j) {
        Weight lam_j = x_degree(ctx_, weights_[j], content(mods[j], ctx_.rank()));
        e -= pairing(lam_j, nu_i);
      }
    }
    const S sign = ctx_.zpow(e);
    // per-slot candidate targets with nonzero coaction coefficients
    std::vector<std::vector<std::pair<Word, S>>> options(n);
    for (std::size_t t = 0; t < n; ++t) {
      MultiDegree target_deg = content(blocks[t], ctx_.rank()) + content(mods[t], ctx_.rank());
      for (const Word& cand : word_basis(target_deg)) {
        const LinT<S>& terms = coaction_terms(t, cand);
        auto it = terms.find(WordTuple{blocks[t], mods[t]});
        if (it != terms.end() && !is_zero(it->second)) options[t].emplace_back(cand, it->second);
      }
      if (options[t].empty()) return;
    }
    WordTuple u(x.size() - 1);
    for (int s = 0; s < r - 1; ++s) u[static_cast<std::size_t>(s)] = x[static_cast<std::size_t>(s)];
    std::function<void(std::size_t, S)> walk = [&](std::size_t t, S acc) {
      if (t == n) {
        auto it = dst.index.find(u);
        if (it == dst.index.end()) throw Error("dual action image outside target basis");
        d(it->second, col) += acc;
        return;
      }
      for (const auto& [cand, c] : options[t]) {
        u[static_cast<std::size_t>(r - 1) + t] = cand;
        walk(t + 1, S(acc * c));
      }
    };
    walk(0, sign);
  }

  const Ctx<Ring>& ctx_;
  std::vector<Weight> weights_;
  std::vector<std::map<Word, LinT<S>>> cache_;
};

// The matrix of the product form S_{r; Lambda...} on a chain basis
// (rows and columns both indexed by the basis; block-diagonal across
// polydegrees since distinct contents are orthogonal).
template <class Ring>
Mat<typename Ring::Scalar> s_matrix(const Ctx<Ring>& ctx, const std::vector<Weight>& weights,
                                    const ChainBasis& cb) {
  using S = typename Ring::Scalar;
  Mat<S> m = zero_matrix<S>(cb.dim(), cb.dim());
  for (int a = 0; a < cb.dim(); ++a) {
    const WordTuple& ta = cb.tuples[static_cast<std::size_t>(a)];
    for (int b = 0; b < cb.dim(); ++b) {
      const WordTuple& tb = cb.tuples[static_cast<std::size_t>(b)];
      bool compatible = true;
      for (std::size_t s = 0; s < ta.size() && compatible; ++s)
        compatible = content(ta[s], ctx.rank()) == content(tb[s], ctx.rank());
      if (compatible) m(a, b) = form_s_tensor(ctx, cb.r, weights, ta, tb);
    }
  }
  return m;
}

// Slotwise projection from the free-side chain basis onto the quotient-side
// one.
template <class Ring>
Mat<typename Ring::Scalar> chain_projection(const Ctx<Ring>& ctx, const ComplexRequest<Ring>& qreq,
                                            const ChainBasis& free_cb,
                                            const ChainBasis& quot_cb) {
  using S = typename Ring::Scalar;
  Mat<S> p = zero_matrix<S>(quot_cb.dim(), free_cb.dim());
  for (int col = 0; col < free_cb.dim(); ++col) {
    LinT<S> unit;
    unit.emplace(free_cb.tuples[static_cast<std::size_t>(col)], ctx.ring.one());
    for (const auto& [t, c] : detail::reduce_chain(ctx, qreq, free_cb.r, unit)) {
      auto it = quot_cb.index.find(t);
      if (it == quot_cb.index.end()) throw Error("projected chain outside quotient basis");
      p(it->second, col) += c;
    }
  }
  return p;
}

template <class S>
struct SMorphismReport {
  bool chain_map = true;         // d* S = S d at every level
  bool ranks_match = true;       // rank S_r = dim of the quotient-side term
  bool kernel_matches = true;    // Ker(projection) lies inside Ker(S)
  bool image_commutes = true;    // S restricted to representatives conjugates
                                 // the quotient differential into the dual one
  std::vector<int> s_ranks;
  std::vector<int> quotient_dims;
  std::vector<Mat<S>> s_matrices;       // per level r
  std::vector<Mat<S>> dual_boundary;    // per level r >= 1

  bool all() const { return chain_map && ranks_match && kernel_matches && image_commutes; }
};

// Verifies that the form matrices define a morphism of complexes whose image
// is the quotient-side complex.
template <class Ring>
SMorphismReport<typename Ring::Scalar> s_morphism_check(const Ctx<Ring>& ctx,
                                                        const std::vector<Weight>& weights,
                                                        const QuotientTables<Ring>& tables,
                                                        const MultiDegree& nu) {
  using S = typename Ring::Scalar;
  static_assert(Ring::is_field, "quotient-side comparison needs a field");
  ComplexRequest<Ring> freq{AlgebraKind::Free, ModuleKind::Verma, weights, nullptr};
  ComplexRequest<Ring> qreq{AlgebraKind::Quotient, ModuleKind::Irreducible, weights, &tables};
  GradedComplex<Ring> cf = build_complex(ctx, freq, nu);
  GradedComplex<Ring> cq = build_complex(ctx, qreq, nu);
  DualSide<Ring> dual(ctx, weights);

  SMorphismReport<S> rep;
  const int rmax = nu.depth();
  std::vector<Mat<S>> smat(static_cast<std::size_t>(rmax) + 1);
  std::vector<Mat<S>> dstar(static_cast<std::size_t>(rmax) + 1);
  std::vector<Mat<S>> proj(static_cast<std::size_t>(rmax) + 1);
  for (int r = 0; r <= rmax; ++r) {
    smat[static_cast<std::size_t>(r)] =
        s_matrix(ctx, weights, cf.terms[static_cast<std::size_t>(r)]);
    proj[static_cast<std::size_t>(r)] = chain_projection(
        ctx, qreq, cf.terms[static_cast<std::size_t>(r)], cq.terms[static_cast<std::size_t>(r)]);
    rep.s_ranks.push_back(rank(ctx.ring, smat[static_cast<std::size_t>(r)]));
    rep.quotient_dims.push_back(cq.terms[static_cast<std::size_t>(r)].dim());
    if (rep.s_ranks.back() != rep.quotient_dims.back()) rep.ranks_match = false;
    Mat<S> ker = kernel_basis(ctx.ring, proj[static_cast<std::size_t>(r)]);
    if (ker.cols() > 0 && !is_zero_matrix<S>(smat[static_cast<std::size_t>(r)] * ker))
      rep.kernel_matches = false;
  }
  for (int r = 1; r <= rmax; ++r) {
    dstar[static_cast<std::size_t>(r)] = dual.boundary(cf.terms[static_cast<std::size_t>(r)],
                                                       cf.terms[static_cast<std::size_t>(r - 1)]);
    Mat<S> lhs = smat[static_cast<std::size_t>(r - 1)] * cf.boundary[static_cast<std::size_t>(r)];
    Mat<S> rhs = dstar[static_cast<std::size_t>(r)] * smat[static_cast<std::size_t>(r)];
    if (!is_zero_matrix<S>(Mat<S>(lhs - rhs))) rep.chain_map = false;
  }
  // Phi_r = S_r restricted to representative columns; check that it carries
  // the quotient differential to the dual differential.
  std::vector<Mat<S>> phi(static_cast<std::size_t>(rmax) + 1);
  for (int r = 0; r <= rmax; ++r) {
    const auto& fcb = cf.terms[static_cast<std::size_t>(r)];
    const auto& qcb = cq.terms[static_cast<std::size_t>(r)];
    Mat<S> m = zero_matrix<S>(fcb.dim(), qcb.dim());
    for (int k = 0; k < qcb.dim(); ++k) {
      auto it = fcb.index.find(qcb.tuples[static_cast<std::size_t>(k)]);
      if (it == fcb.index.end()) throw Error("representative tuple missing upstairs");
      m(it->second, k) = ctx.ring.one();
    }
    phi[static_cast<std::size_t>(r)] = smat[static_cast<std::size_t>(r)] * m;
  }
  for (int r = 1; r <= rmax; ++r) {
    Mat<S> lhs = phi[static_cast<std::size_t>(r - 1)] * cq.boundary[static_cast<std::size_t>(r)];
    Mat<S> rhs = dstar[static_cast<std::size_t>(r)] * phi[static_cast<std::size_t>(r)];
    if (!is_zero_matrix<S>(Mat<S>(lhs - rhs))) rep.image_commutes = false;
  }
  rep.s_matrices = std::move(smat);
  rep.dual_boundary = std::move(dstar);
  return rep;
}

}  // namespace qsh
