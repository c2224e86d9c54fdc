#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qshuffle/radical.hpp"

namespace qsh {

// Bar complexes C^{-r}_A(M) = A^{+ (x) r} (x) M for A one of {F, f} and M a
// Verma tensor product or an irreducible tensor product. A chain basis
// element is stored as a tuple of r + n words: storage slot s < r holds the
// bar factor a_{r-s} (so slot 0 is the leftmost factor a_r and slot r-1 is
// a_1, the one that acts on the module), and slots r..r+n-1 hold the module
// factors.

enum class AlgebraKind { Free, Quotient };
enum class ModuleKind { Verma, Irreducible };

template <class Ring>
struct QuotientTables {
  std::map<MultiDegree, QuotientBasis<typename Ring::Scalar>> f;
  std::vector<std::map<MultiDegree, QuotientBasis<typename Ring::Scalar>>> l;
};

template <class Ring>
QuotientTables<Ring> build_quotient_tables(const Ctx<Ring>& ctx, const std::vector<Weight>& weights,
                                           int depth_max) {
  QuotientTables<Ring> t;
  auto degrees = enumerate_multidegrees(ctx.rank(), depth_max);
  for (const MultiDegree& nu : degrees) t.f.emplace(nu, radical_basis_f(ctx, nu));
  t.l.resize(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k)
    for (const MultiDegree& nu : degrees)
      t.l[k].emplace(nu, radical_basis_l(ctx, weights[k], nu));
  return t;
}

struct ChainBasis {
  int r = 0;
  int n = 1;
  MultiDegree nu;
  std::vector<WordTuple> tuples;
  std::map<WordTuple, int> index;

  int dim() const { return static_cast<int>(tuples.size()); }
};

template <class Ring>
struct ComplexRequest {
  AlgebraKind algebra = AlgebraKind::Free;
  ModuleKind module = ModuleKind::Verma;
  std::vector<Weight> weights;                 // one per module slot
  const QuotientTables<Ring>* tables = nullptr;  // required for Quotient/Irreducible
};

template <class Ring>
struct GradedComplex {
  MultiDegree nu;
  std::vector<ChainBasis> terms;                       // index r = 0 .. depth(nu)
  std::vector<Mat<typename Ring::Scalar>> boundary;    // boundary[r] : C^{-r} -> C^{-r+1}, r >= 1
};

namespace detail {

// All multidegrees mu <= nu componentwise (including 0 and nu), lex order.
inline std::vector<MultiDegree> sub_degrees(const MultiDegree& nu) {
  std::vector<MultiDegree> out;
  MultiDegree cur(nu.rank());
  std::function<void(int)> rec = [&](int i) {
    if (i == nu.rank()) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= nu[i]; ++k) {
      cur.v[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

template <class Ring>
const QuotientBasis<typename Ring::Scalar>& slot_quotient(const ComplexRequest<Ring>& req,
                                                          int slot, int r,
                                                          const MultiDegree& nu) {
  const auto& tables = *req.tables;
  if (slot < r) {
    auto it = tables.f.find(nu);
    if (it == tables.f.end()) throw WindowExceeded("quotient table misses a degree");
    return it->second;
  }
  auto it = tables.l[static_cast<std::size_t>(slot - r)].find(nu);
  if (it == tables.l[static_cast<std::size_t>(slot - r)].end())
    throw WindowExceeded("quotient table misses a degree");
  return it->second;
}

// Words available in one chain slot at a fixed degree.
template <class Ring>
std::vector<Word> slot_basis(const Ctx<Ring>&, const ComplexRequest<Ring>& req, int slot, int r,
                             const MultiDegree& nu) {
  const bool algebra_slot = slot < r;
  const bool quotient = algebra_slot ? (req.algebra == AlgebraKind::Quotient)
                                     : (req.module == ModuleKind::Irreducible);
  if (!quotient) return word_basis(nu);
  const auto& q = slot_quotient(req, slot, r, nu);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(q.dim()));
  for (int k : q.selected) out.push_back(q.ambient[static_cast<std::size_t>(k)]);
  return out;
}

// Rewrites a raw chain element slot by slot into the representative bases
// (identity in the free/Verma case).
template <class Ring>
LinT<typename Ring::Scalar> reduce_chain(const Ctx<Ring>& ctx, const ComplexRequest<Ring>& req,
                                         int r, const LinT<typename Ring::Scalar>& raw) {
  using S = typename Ring::Scalar;
  const bool any_quotient =
      req.algebra == AlgebraKind::Quotient || req.module == ModuleKind::Irreducible;
  if (!any_quotient) return raw;
  LinT<S> out;
  for (const auto& [tuple, coeff] : raw) {
    std::vector<std::pair<WordTuple, S>> partial;
    partial.emplace_back(WordTuple{}, coeff);
    for (std::size_t s = 0; s < tuple.size(); ++s) {
      const bool algebra_slot = static_cast<int>(s) < r;
      const bool quotient = algebra_slot ? (req.algebra == AlgebraKind::Quotient)
                                         : (req.module == ModuleKind::Irreducible);
      std::vector<std::pair<WordTuple, S>> next;
      if (!quotient) {
        for (auto& [prefix, c] : partial) {
          WordTuple t = prefix;
          t.push_back(tuple[s]);
          next.emplace_back(std::move(t), c);
        }
      } else {
        const auto& q = slot_quotient(req, static_cast<int>(s), r, content(tuple[s], ctx.rank()));
        auto it = q.ambient_index.find(tuple[s]);
        if (it == q.ambient_index.end()) throw SizeMismatch("word outside graded component");
        for (int k = 0; k < q.dim(); ++k) {
          const S& f = q.projection(k, it->second);
          if (is_zero(f)) continue;
          for (auto& [prefix, c] : partial) {
            WordTuple t = prefix;
            t.push_back(q.ambient[static_cast<std::size_t>(q.selected[static_cast<std::size_t>(k)])]);
            next.emplace_back(std::move(t), S(c * f));
          }
        }
      }
      partial = std::move(next);
    }
    for (auto& [t, c] : partial) add_term(out, t, c);
  }
  return out;
}

}  // namespace detail

// The (-r)-term of the bar complex at total degree nu: interior bar factors
// carry strictly positive degrees, module slots are unconstrained.
template <class Ring>
ChainBasis chain_basis(const Ctx<Ring>& ctx, const ComplexRequest<Ring>& req, int r,
                       const MultiDegree& nu) {
  ChainBasis cb;
  cb.r = r;
  cb.n = static_cast<int>(req.weights.size());
  cb.nu = nu;
  const int slots = r + cb.n;
  std::vector<MultiDegree> split(static_cast<std::size_t>(slots), MultiDegree(ctx.rank()));
  std::function<void(int, const MultiDegree&)> over_splits = [&](int s, const MultiDegree& rest) {
    if (s == slots) {
      if (rest.depth() != 0) return;
      // cartesian product of slot bases
      std::vector<std::vector<Word>> per_slot;
      for (int t = 0; t < slots; ++t)
        per_slot.push_back(detail::slot_basis(ctx, req, t, r, split[static_cast<std::size_t>(t)]));
      for (const auto& b : per_slot)
        if (b.empty()) return;
      WordTuple tuple(static_cast<std::size_t>(slots));
      std::function<void(int)> product = [&](int t) {
        if (t == slots) {
          cb.index.emplace(tuple, static_cast<int>(cb.tuples.size()));
          cb.tuples.push_back(tuple);
          return;
        }
        for (const Word& w : per_slot[static_cast<std::size_t>(t)]) {
          tuple[static_cast<std::size_t>(t)] = w;
          product(t + 1);
        }
      };
      product(0);
      return;
    }
    for (const MultiDegree& mu : detail::sub_degrees(rest)) {
      if (s < r && mu.depth() == 0) continue;  // bar factors lie in the augmentation ideal
      split[static_cast<std::size_t>(s)] = mu;
      MultiDegree next(rest.rank());
      next.v = rest.v - mu.v;
      over_splits(s + 1, next);
    }
  };
  over_splits(0, nu);
  return cb;
}

// d(a_r | ... | a_1 | m) = sum_{p=1}^{r-1} (-1)^p a_r | ... | a_{p+1} a_p | ... | a_1 | m
//                          + a_r | ... | a_2 | a_1 m.
// The module term uses the twisted tensor action; the merge terms use the
// algebra product (with reduction to representatives in the quotient case).
template <class Ring>
Mat<typename Ring::Scalar> boundary_matrix(const Ctx<Ring>& ctx, const ComplexRequest<Ring>& req,
                                           const ChainBasis& src, const ChainBasis& dst) {
  using S = typename Ring::Scalar;
  const int r = src.r;
  Mat<S> d = zero_matrix<S>(dst.dim(), src.dim());
  if (r == 0) return d;
  for (int col = 0; col < src.dim(); ++col) {
    const WordTuple& t = src.tuples[static_cast<std::size_t>(col)];
    LinT<S> image;
    // merge terms: a_{p+1} a_p at storage slots (r-p-1, r-p)
    for (int p = 1; p <= r - 1; ++p) {
      WordTuple u;
      u.reserve(t.size() - 1);
      for (int s = 0; s < r - p - 1; ++s) u.push_back(t[static_cast<std::size_t>(s)]);
      u.push_back(concat(t[static_cast<std::size_t>(r - p - 1)], t[static_cast<std::size_t>(r - p)]));
      for (std::size_t s = static_cast<std::size_t>(r - p + 1); s < t.size(); ++s) u.push_back(t[s]);
      add_term(image, u, (p % 2 == 1) ? S(-ctx.ring.one()) : ctx.ring.one());
    }
    // module term: a_1 acts on the module factors
    {
      Lin<S> a1;
      a1.emplace(t[static_cast<std::size_t>(r - 1)], ctx.ring.one());
      LinT<S> mod;
      mod.emplace(WordTuple(t.begin() + r, t.end()), ctx.ring.one());
      LinT<S> acted = f_action(ctx, req.weights, a1, mod);
      for (const auto& [mt, mc] : acted) {
        WordTuple u;
        u.reserve(t.size() - 1);
        for (int s = 0; s < r - 1; ++s) u.push_back(t[static_cast<std::size_t>(s)]);
        for (const Word& w : mt) u.push_back(w);
        add_term(image, u, mc);
      }
    }
    for (const auto& [u, c] : detail::reduce_chain(ctx, req, r - 1, image)) {
      auto it = dst.index.find(u);
      if (it == dst.index.end()) throw Error("boundary image outside target basis");
      d(it->second, col) += c;
    }
  }
  return d;
}

template <class Ring>
GradedComplex<Ring> build_complex(const Ctx<Ring>& ctx, const ComplexRequest<Ring>& req,
                                  const MultiDegree& nu) {
  if ((req.algebra == AlgebraKind::Quotient || req.module == ModuleKind::Irreducible) &&
      req.tables == nullptr)
    throw ConfigError("quotient-side complex needs precomputed quotient tables");
  GradedComplex<Ring> c;
  c.nu = nu;
  const int rmax = nu.depth();
  c.terms.reserve(static_cast<std::size_t>(rmax) + 1);
  for (int r = 0; r <= rmax; ++r) c.terms.push_back(chain_basis(ctx, req, r, nu));
  c.boundary.resize(static_cast<std::size_t>(rmax) + 1);
  for (int r = 1; r <= rmax; ++r)
    c.boundary[static_cast<std::size_t>(r)] =
        boundary_matrix(ctx, req, c.terms[static_cast<std::size_t>(r)],
                        c.terms[static_cast<std::size_t>(r - 1)]);
  return c;
}

// Exact homology dimensions: dim H^{-r} = dim Ker(d_{-r}) - rank(d_{-r-1}).
template <class Ring>
std::vector<std::pair<int, int>> homology_dims(const Ctx<Ring>& ctx,
                                               const GradedComplex<Ring>& c) {
  std::vector<std::pair<int, int>> out;
  const int rmax = static_cast<int>(c.terms.size()) - 1;
  for (int r = 0; r <= rmax; ++r) {
    const int dim_r = c.terms[static_cast<std::size_t>(r)].dim();
    int rank_out = 0;
    if (r >= 1) rank_out = rank(ctx.ring, c.boundary[static_cast<std::size_t>(r)]);
    int rank_in = 0;
    if (r + 1 <= rmax) rank_in = rank(ctx.ring, c.boundary[static_cast<std::size_t>(r + 1)]);
    out.emplace_back(r, dim_r - rank_out - rank_in);
  }
  return out;
}

template <class Ring>
bool d_squared_is_zero(const GradedComplex<Ring>& c) {
  using S = typename Ring::Scalar;
  for (std::size_t r = 2; r < c.terms.size(); ++r) {
    if (c.terms[r].dim() == 0 || c.terms[r - 2].dim() == 0) continue;
    Mat<S> prod = c.boundary[r - 1] * c.boundary[r];
    if (!is_zero_matrix(prod)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The combinatorial bases theta_{rho <= tau}.

// A map rho : ground -> [-n+1, r] hitting every value in [1, r].
struct RhoMap {
  int r = 0;
  int n = 1;
  std::vector<int> values;  // indexed by the ground set
};

inline std::vector<RhoMap> enumerate_rho(int r, int n, int ground_size) {
  std::vector<RhoMap> out;
  if (r < 0) return out;
  const int lo = -n + 1;
  std::vector<int> v(static_cast<std::size_t>(ground_size), lo);
  while (true) {
    bool surjective = true;
    for (int a = 1; a <= r && surjective; ++a)
      surjective = std::find(v.begin(), v.end(), a) != v.end();
    if (surjective) out.push_back(RhoMap{r, n, v});
    int p = ground_size - 1;
    while (p >= 0 && v[static_cast<std::size_t>(p)] == r) v[static_cast<std::size_t>(p--)] = lo;
    if (p < 0) break;
    ++v[static_cast<std::size_t>(p)];
  }
  return out;
}

// Total orders refining rho: bijections tau : ground -> [1, N] with
// rho(i) < rho(j) implying tau(i) < tau(j).
inline std::vector<std::vector<int>> refinements(const RhoMap& rho) {
  const int g = static_cast<int>(rho.values.size());
  std::vector<int> order(static_cast<std::size_t>(g));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    // order lists ground elements by increasing tau
    bool ok = true;
    for (int p = 0; p + 1 < g && ok; ++p)
      ok = rho.values[static_cast<std::size_t>(order[p])] <=
           rho.values[static_cast<std::size_t>(order[p + 1])];
    if (!ok) continue;
    std::vector<int> tau(static_cast<std::size_t>(g));
    for (int p = 0; p < g; ++p) tau[static_cast<std::size_t>(order[p])] = p + 1;
    out.push_back(tau);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// The basis monomial theta_{rho <= tau}: slot a gets the letters of
// rho^{-1}(a) in decreasing tau-order; slots are stored from a = r down to
// a = -n+1.
inline WordTuple refinement_basis(const RhoMap& rho, const std::vector<int>& tau) {
  const int g = static_cast<int>(rho.values.size());
  if (static_cast<int>(tau.size()) != g) throw SizeMismatch("refinement has wrong size");
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      if (rho.values[static_cast<std::size_t>(i)] < rho.values[static_cast<std::size_t>(j)] &&
          tau[static_cast<std::size_t>(i)] >= tau[static_cast<std::size_t>(j)])
        throw NotARefinement("tau does not refine rho");
  WordTuple tuple;
  for (int a = rho.r; a >= -rho.n + 1; --a) {
    std::vector<int> block;
    for (int i = 0; i < g; ++i)
      if (rho.values[static_cast<std::size_t>(i)] == a) block.push_back(i);
    std::sort(block.begin(), block.end(), [&](int x, int y) {
      return tau[static_cast<std::size_t>(x)] > tau[static_cast<std::size_t>(y)];
    });
    tuple.push_back(Word(block.begin(), block.end()));
  }
  return tuple;
}

}  // namespace qsh
