#pragma once

#include <vector>

#include "qshuffle/s_morphism.hpp"

namespace qsh {

// Unfoldings pi : J -> I. The multidegree nu determines J up to isomorphism:
// one element per letter occurrence, fibers ordered by (generator, copy).
// Everything on the J side is transport of structure: the form on Z[J] is
// pulled back along pi, and so are the weights.
struct Unfolding {
  CartanData j_cartan;
  std::vector<int> pi;                   // J -> I
  std::vector<std::vector<int>> fibers;  // per generator of I
  MultiDegree nu;                        // the unfolded multidegree, on I
};

inline Unfolding unfold(const CartanData& c, const MultiDegree& nu) {
  Unfolding u;
  u.nu = nu;
  u.fibers.resize(static_cast<std::size_t>(c.rank()));
  for (int i = 0; i < c.rank(); ++i)
    for (int k = 0; k < nu[i]; ++k) {
      u.fibers[static_cast<std::size_t>(i)].push_back(static_cast<int>(u.pi.size()));
      u.pi.push_back(i);
    }
  const int n = static_cast<int>(u.pi.size());
  IntMatrix dot(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      dot(a, b) = c.dot(u.pi[static_cast<std::size_t>(a)], u.pi[static_cast<std::size_t>(b)]);
  u.j_cartan = CartanData(dot);
  return u;
}

inline MultiDegree chi_j(const Unfolding& u) {
  MultiDegree chi(static_cast<int>(u.pi.size()));
  for (int j = 0; j < chi.rank(); ++j) chi.v[j] = 1;
  return chi;
}

// All fiber-preserving bijections of J.
inline std::vector<std::vector<int>> sigma_pi_elements(const Unfolding& u) {
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(u.pi.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> fiber_perms;
  std::function<void(std::size_t)> rec = [&](std::size_t fi) {
    if (fi == u.fibers.size()) {
      out.push_back(sigma);
      return;
    }
    std::vector<int> perm = u.fibers[fi];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t k = 0; k < perm.size(); ++k)
        sigma[static_cast<std::size_t>(u.fibers[fi][k])] = perm[k];
      rec(fi + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
  return out;
}

inline Weight pullback_weight(const Unfolding& u, const Weight& lambda) {
  Weight w(static_cast<int>(u.pi.size()));
  for (int j = 0; j < w.rank(); ++j) w.v[j] = lambda[u.pi[static_cast<std::size_t>(j)]];
  return w;
}

// Letterwise relabeling J -> I.
inline Word project_word(const Unfolding& u, const Word& w) {
  Word r(w.size());
  for (std::size_t p = 0; p < w.size(); ++p) r[p] = u.pi[static_cast<std::size_t>(w[p])];
  return r;
}

template <class S>
Lin<S> project_element(const Unfolding& u, const Lin<S>& x) {
  Lin<S> r;
  for (const auto& [w, c] : x) add_term(r, project_word(u, w), c);
  return r;
}

template <class S>
LinT<S> project_tuple(const Unfolding& u, const LinT<S>& x) {
  LinT<S> r;
  for (const auto& [t, c] : x) {
    WordTuple pt(t.size());
    for (std::size_t s = 0; s < t.size(); ++s) pt[s] = project_word(u, t[s]);
    add_term(r, pt, c);
  }
  return r;
}

namespace detail {

// All J-words lifting a given I-word, each fiber element used exactly once.
inline void lift_word(const Unfolding& u, const Word& w, std::size_t pos, Word& cur,
                      std::vector<bool>& used, std::vector<Word>& out) {
  if (pos == w.size()) {
    out.push_back(cur);
    return;
  }
  for (int j : u.fibers[static_cast<std::size_t>(w[pos])]) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(j)] = true;
    cur.push_back(j);
    lift_word(u, w, pos + 1, cur, used, out);
    cur.pop_back();
    used[static_cast<std::size_t>(j)] = false;
  }
}

}  // namespace detail

// The averaging map: the sum over all lifts of the letter sequence.
template <class S>
Lin<S> average(const Unfolding& u, const Lin<S>& x) {
  Lin<S> r;
  for (const auto& [w, c] : x) {
    if (content(w, static_cast<int>(u.fibers.size())) != u.nu)
      throw SizeMismatch("average: element degree differs from the unfolded degree");
    std::vector<Word> lifts;
    Word cur;
    std::vector<bool> used(u.pi.size(), false);
    detail::lift_word(u, w, 0, cur, used, lifts);
    for (const Word& lw : lifts) add_term(r, lw, c);
  }
  return r;
}

// Joint lift of a word tuple: positions across all slots share one pool of
// fiber elements, so the total J-degree is chi_J.
template <class S>
LinT<S> average_tuple(const Unfolding& u, const LinT<S>& x) {
  LinT<S> r;
  for (const auto& [t, c] : x) {
    Word flat;
    std::vector<std::size_t> lens;
    for (const Word& w : t) {
      lens.push_back(w.size());
      flat.insert(flat.end(), w.begin(), w.end());
    }
    std::vector<Word> lifts;
    Word cur;
    std::vector<bool> used(u.pi.size(), false);
    detail::lift_word(u, flat, 0, cur, used, lifts);
    for (const Word& lw : lifts) {
      WordTuple lt;
      std::size_t at = 0;
      for (std::size_t len : lens) {
        lt.emplace_back(lw.begin() + static_cast<long>(at),
                        lw.begin() + static_cast<long>(at + len));
        at += len;
      }
      add_term(r, lt, c);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Compatibility squares.

template <class Ring>
Ctx<Ring> j_side_ctx(const Ctx<Ring>& ctx, const Unfolding& u) {
  return Ctx<Ring>{ctx.ring, u.j_cartan};
}

// (i)  S-square on the free algebra, (ii) S-squares on the Verma modules,
// (iii) the coaction square, (iv) the m-fold tensor square. Everything is
// checked as an exact identity between the I-side and J-side evaluations.
template <class Ring>
CheckReport check_squares(const Ctx<Ring>& ctx, const MultiDegree& nu,
                          const std::vector<Weight>& weights, int m) {
  using S = typename Ring::Scalar;
  CheckReport report;
  Unfolding u = unfold(ctx.cartan, nu);
  Ctx<Ring> jctx = j_side_ctx(ctx, u);
  const auto i_words = word_basis(nu);
  const auto j_words = word_basis(chi_j(u));

  {
    bool pass = true;
    for (const Word& w : i_words) {
      Lin<S> avg = average(u, Lin<S>{{w, ctx.ring.one()}});
      for (const Word& jw : j_words) {
        S lhs = form_s_rec(ctx, w, project_word(u, jw));
        S rhs = ctx.ring.zero();
        for (const auto& [lw, lc] : avg) rhs += lc * form_s_rec(jctx, lw, jw);
        if (!(lhs == rhs)) {
          pass = false;
          break;
        }
      }
      if (!pass) break;
    }
    report.add("S-square F", pass);
  }

  for (std::size_t wi = 0; wi < weights.size(); ++wi) {
    const Weight& lambda = weights[wi];
    Weight plambda = pullback_weight(u, lambda);
    bool pass = true;
    for (const Word& w : i_words) {
      Lin<S> avg = average(u, Lin<S>{{w, ctx.ring.one()}});
      for (const Word& jw : j_words) {
        S lhs = form_s_lambda_rec(ctx, lambda, w, project_word(u, jw));
        S rhs = ctx.ring.zero();
        for (const auto& [lw, lc] : avg) rhs += lc * form_s_lambda_rec(jctx, plambda, lw, jw);
        if (!(lhs == rhs)) {
          pass = false;
          break;
        }
      }
      if (!pass) break;
    }
    report.add("S-square V(Lambda_" + std::to_string(wi) + ")", pass);
  }

  for (std::size_t wi = 0; wi < weights.size(); ++wi) {
    const Weight& lambda = weights[wi];
    Weight plambda = pullback_weight(u, lambda);
    bool pass = true;
    for (const Word& w : i_words) {
      LinT<S> lhs = average_tuple(u, coaction_word(ctx, lambda, w));
      Lin<S> avg = average(u, Lin<S>{{w, ctx.ring.one()}});
      LinT<S> rhs;
      for (const auto& [lw, lc] : avg) {
        LinT<S> co = coaction_word(jctx, plambda, lw);
        add_scaled(rhs, co, lc);
      }
      if (!equal_elements(lhs, rhs)) {
        pass = false;
        break;
      }
    }
    report.add("coaction-square V(Lambda_" + std::to_string(wi) + ")", pass);
  }

  {
    // the m-fold square: enumerate tuple bases on both sides
    ChainBasis icb, jcb;
    ComplexRequest<Ring> ireq{AlgebraKind::Free, ModuleKind::Verma, weights, nullptr};
    icb = chain_basis(ctx, ireq, m, nu);
    std::vector<Weight> jweights;
    for (const Weight& lw : weights) jweights.push_back(pullback_weight(u, lw));
    ComplexRequest<Ring> jreq{AlgebraKind::Free, ModuleKind::Verma, jweights, nullptr};
    jcb = chain_basis(jctx, jreq, m, chi_j(u));
    bool pass = true;
    for (int a = 0; a < icb.dim() && pass; ++a) {
      LinT<S> unit;
      unit.emplace(icb.tuples[static_cast<std::size_t>(a)], ctx.ring.one());
      LinT<S> avg = average_tuple(u, unit);
      for (int b = 0; b < jcb.dim() && pass; ++b) {
        const WordTuple& jt = jcb.tuples[static_cast<std::size_t>(b)];
        WordTuple pj(jt.size());
        for (std::size_t s = 0; s < jt.size(); ++s) pj[s] = project_word(u, jt[s]);
        S lhs = form_s_tensor(ctx, m, weights, icb.tuples[static_cast<std::size_t>(a)], pj);
        S rhs = ctx.ring.zero();
        for (const auto& [lt, lc] : avg) rhs += lc * form_s_tensor(jctx, m, jweights, lt, jt);
        if (!(lhs == rhs)) pass = false;
      }
    }
    report.add("tensor-square m=" + std::to_string(m), pass);
  }

  return report;
}

// Homology of the Sigma_pi-invariant part of the J-side complex; compared by
// the tests against the I-side homology (the averaged complex isomorphism).
template <class Ring>
std::vector<std::pair<int, int>> invariant_homology_dims(const Ctx<Ring>& ctx, const Unfolding& u,
                                                         const Weight& lambda) {
  using S = typename Ring::Scalar;
  static_assert(Ring::is_field, "invariant subcomplex extraction needs a field");
  Ctx<Ring> jctx = j_side_ctx(ctx, u);
  Weight plambda = pullback_weight(u, lambda);
  ComplexRequest<Ring> req{AlgebraKind::Free, ModuleKind::Verma, {plambda}, nullptr};
  GradedComplex<Ring> c = build_complex(jctx, req, chi_j(u));
  auto sigmas = sigma_pi_elements(u);
  const int rmax = static_cast<int>(c.terms.size()) - 1;

  // invariant bases per level
  std::vector<Mat<S>> inv(static_cast<std::size_t>(rmax) + 1);
  for (int r = 0; r <= rmax; ++r) {
    const ChainBasis& cb = c.terms[static_cast<std::size_t>(r)];
    const int dim = cb.dim();
    if (dim == 0) {
      inv[static_cast<std::size_t>(r)] = zero_matrix<S>(0, 0);
      continue;
    }
    Mat<S> stacked = zero_matrix<S>(dim * static_cast<int>(sigmas.size()), dim);
    int at = 0;
    for (const auto& sigma : sigmas) {
      for (int col = 0; col < dim; ++col) {
        WordTuple t = cb.tuples[static_cast<std::size_t>(col)];
        for (Word& w : t)
          for (int& letter : w) letter = sigma[static_cast<std::size_t>(letter)];
        auto it = cb.index.find(t);
        if (it == cb.index.end()) throw Error("group action leaves the component");
        stacked(at + it->second, col) += ctx.ring.one();
        stacked(at + col, col) -= ctx.ring.one();
      }
      at += dim;
    }
    inv[static_cast<std::size_t>(r)] = kernel_basis(ctx.ring, stacked);
  }

  std::vector<std::pair<int, int>> out;
  for (int r = 0; r <= rmax; ++r) {
    const Mat<S>& b = inv[static_cast<std::size_t>(r)];
    int rank_out = 0, rank_in = 0;
    if (r >= 1 && b.cols() > 0 && inv[static_cast<std::size_t>(r - 1)].cols() >= 0) {
      Mat<S> img = c.boundary[static_cast<std::size_t>(r)] * b;
      rank_out = rank(ctx.ring, img);
    }
    if (r + 1 <= rmax && inv[static_cast<std::size_t>(r + 1)].cols() > 0) {
      Mat<S> img = c.boundary[static_cast<std::size_t>(r + 1)] * inv[static_cast<std::size_t>(r + 1)];
      rank_in = rank(ctx.ring, img);
    }
    out.emplace_back(r, static_cast<int>(b.cols()) - rank_out - rank_in);
  }
  return out;
}

}  // namespace qsh
