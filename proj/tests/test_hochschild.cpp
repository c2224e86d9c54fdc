#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qshuffle/s_morphism.hpp"

using namespace qsh;

namespace {

Weight wt(const CartanData& c, std::initializer_list<long> vals) {
  return weight_from_coordinates(c, std::vector<long>(vals));
}

MultiDegree md(std::initializer_list<int> vals) {
  Eigen::VectorXi v(static_cast<int>(vals.size()));
  int k = 0;
  for (int x : vals) v[k++] = x;
  return MultiDegree(v);
}

// Homology support of B over B[theta]/(theta^l) from its minimal resolution
// ... -> A(-s) --theta--> A --theta^{l-1}--> A --theta--> A -> B: the shifts
// alternate by 1 and l-1, so Tor_r lives in degree s_r with s_0 = 0,
// s_{2m+1} = s_{2m} + 1, s_{2m+2} = s_{2m+1} + (l - 1).
std::set<std::pair<int, int>> truncated_algebra_oracle(int l, int window) {
  std::set<std::pair<int, int>> expected;
  int shift = 0, r = 0;
  while (shift <= window) {
    expected.emplace(r, shift);
    shift += (r % 2 == 0) ? 1 : l - 1;
    ++r;
  }
  return expected;
}

}  // namespace

TEST_CASE("single-step complex for the Verma module") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A1"));
  ComplexRequest<CycloField> req{AlgebraKind::Free, ModuleKind::Verma,
                                 {wt(ctx.cartan, {2})}, nullptr};
  auto c = build_complex(ctx, req, md({1}));
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0].dim() == 1);  // V(Lambda)_i
  CHECK(c.terms[1].dim() == 1);  // F_i (x) V(Lambda)_0
  CHECK(c.boundary[1](0, 0) == Cyclo(1));
}

TEST_CASE("interior factors have positive degree") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  ComplexRequest<CycloField> req{AlgebraKind::Free, ModuleKind::Verma,
                                 {wt(ctx.cartan, {1, 1})}, nullptr};
  auto c = build_complex(ctx, req, md({1, 1}));
  CHECK(c.terms.size() == 3);  // r runs to depth(nu) = 2
  CHECK(c.terms[2].dim() == 2);
  for (const auto& t : c.terms[2].tuples)
    for (int s = 0; s < 2; ++s) CHECK(!t[static_cast<std::size_t>(s)].empty());
}

TEST_CASE("d squared vanishes") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> single{wt(ctx.cartan, {2, 1})};
  ComplexRequest<CycloField> req{AlgebraKind::Free, ModuleKind::Verma, single, nullptr};
  for (const auto& nu : enumerate_multidegrees(2, 4)) {
    auto c = build_complex(ctx, req, nu);
    CHECK(d_squared_is_zero(c));
  }
  // two tensor factors
  std::vector<Weight> pair{wt(ctx.cartan, {2, 0}), wt(ctx.cartan, {0, 1})};
  ComplexRequest<CycloField> req2{AlgebraKind::Free, ModuleKind::Verma, pair, nullptr};
  for (const auto& nu : enumerate_multidegrees(2, 3)) {
    auto c = build_complex(ctx, req2, nu);
    CHECK(d_squared_is_zero(c));
  }
}

TEST_CASE("bar complex of a free module is a resolution") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  ComplexRequest<CycloField> req{AlgebraKind::Free, ModuleKind::Verma,
                                 {wt(ctx.cartan, {1, 3})}, nullptr};
  for (const auto& nu : enumerate_multidegrees(2, 4)) {
    auto c = build_complex(ctx, req, nu);
    for (const auto& [r, h] : homology_dims(ctx, c)) {
      if (r == 0)
        CHECK(h == (nu.is_zero() ? 1 : 0));
      else
        CHECK(h == 0);
    }
  }
}

TEST_CASE("trivial coefficients over the truncated algebra match the minimal resolution") {
  const int l = 5, window = 10;
  auto ctx = cyclo_ctx(l, CartanData::preset("A1"));
  std::vector<Weight> zero{wt(ctx.cartan, {0})};
  auto tables = build_quotient_tables(ctx, zero, window);
  ComplexRequest<CycloField> req{AlgebraKind::Quotient, ModuleKind::Irreducible, zero, &tables};
  auto expected = truncated_algebra_oracle(l, window);
  for (int a = 0; a <= window; ++a) {
    auto c = build_complex(ctx, req, md({a}));
    CHECK(d_squared_is_zero(c));
    for (const auto& [r, h] : homology_dims(ctx, c)) {
      const bool hit = expected.count({r, a}) > 0;
      CHECK(h == (hit ? 1 : 0));
    }
  }
}

TEST_CASE("cyclic module in degree zero") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A1"));
  std::vector<Weight> w{wt(ctx.cartan, {2})};
  auto tables = build_quotient_tables(ctx, w, 0);
  ComplexRequest<CycloField> req{AlgebraKind::Quotient, ModuleKind::Irreducible, w, &tables};
  auto c = build_complex(ctx, req, md({0}));
  auto h = homology_dims(ctx, c);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == std::pair<int, int>(0, 1));
}

TEST_CASE("euler characteristic") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A1"));
  std::vector<Weight> w{wt(ctx.cartan, {2})};
  auto tables = build_quotient_tables(ctx, w, 6);
  ComplexRequest<CycloField> req{AlgebraKind::Quotient, ModuleKind::Irreducible, w, &tables};
  for (int a = 0; a <= 6; ++a) {
    auto c = build_complex(ctx, req, md({a}));
    long chi_c = 0, chi_h = 0;
    for (const auto& [r, h] : homology_dims(ctx, c)) {
      long sign = (r % 2 == 0) ? 1 : -1;
      chi_c += sign * c.terms[static_cast<std::size_t>(r)].dim();
      chi_h += sign * h;
    }
    CHECK(chi_c == chi_h);
  }
}

TEST_CASE("rho enumeration") {
  CHECK(enumerate_rho(1, 1, 2).size() == 3);
  CHECK(enumerate_rho(2, 1, 2).size() == 2);
  CHECK(enumerate_rho(0, 1, 2).size() == 1);
  CHECK(enumerate_rho(0, 3, 2).size() == 9);
  CHECK(enumerate_rho(3, 1, 2).empty());
  CHECK(enumerate_rho(-1, 1, 2).empty());
}

TEST_CASE("refinements and basis monomials") {
  // rho constant at 0: every total order tau gives the module monomial
  // theta_{tau^{-1}(N)} ... theta_{tau^{-1}(1)} v
  RhoMap rho{0, 1, {0, 0, 0}};
  auto taus = refinements(rho);
  CHECK(taus.size() == 6);
  for (const auto& tau : taus) {
    WordTuple t = refinement_basis(rho, tau);
    REQUIRE(t.size() == 1);
    const Word& w = t[0];
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      CHECK(tau[static_cast<std::size_t>(w[p])] > tau[static_cast<std::size_t>(w[p + 1])]);
  }

  // bijective rho: single refinement, single-letter slots
  RhoMap bij{2, 1, {2, 1}};
  auto taus2 = refinements(bij);
  REQUIRE(taus2.size() == 1);
  WordTuple t2 = refinement_basis(bij, taus2[0]);
  CHECK(t2 == WordTuple{Word{0}, Word{1}, Word{}});

  // both letters in slot 1: the two orders give the two slot words
  RhoMap both{1, 1, {1, 1}};
  auto taus3 = refinements(both);
  CHECK(taus3.size() == 2);
  std::set<WordTuple> seen;
  for (const auto& tau : taus3) seen.insert(refinement_basis(both, tau));
  CHECK(seen.count(WordTuple{Word{0, 1}, Word{}}) == 1);
  CHECK(seen.count(WordTuple{Word{1, 0}, Word{}}) == 1);

  CHECK_THROWS_AS(refinement_basis(bij, std::vector<int>{1, 2}), NotARefinement);
}

TEST_CASE("refinement monomials enumerate the chain basis of the top component") {
  // multiplicity-free content: ground set = generators of A3
  auto ctx = cyclo_ctx(5, CartanData::preset("A3"));
  for (int n : {1, 2}) {
    std::vector<Weight> ws(static_cast<std::size_t>(n), wt(ctx.cartan, {1, 1, 1}));
    ComplexRequest<CycloField> req{AlgebraKind::Free, ModuleKind::Verma, ws, nullptr};
    for (int r = 0; r <= 3; ++r) {
      auto cb = chain_basis(ctx, req, r, md({1, 1, 1}));
      std::set<WordTuple> from_rho;
      for (const auto& rho : enumerate_rho(r, n, 3))
        for (const auto& tau : refinements(rho)) from_rho.insert(refinement_basis(rho, tau));
      CHECK(from_rho.size() == static_cast<std::size_t>(cb.dim()));
      std::set<WordTuple> from_basis(cb.tuples.begin(), cb.tuples.end());
      CHECK(from_rho == from_basis);
    }
  }

  // ground sets up to five letters: counts match the term dimensions
  for (int g : {4, 5}) {
    IntMatrix dot = 2 * IntMatrix::Identity(g, g);
    auto big = cyclo_ctx(5, CartanData(dot));
    std::vector<Weight> ws{Weight(g)};
    ComplexRequest<CycloField> req{AlgebraKind::Free, ModuleKind::Verma, ws, nullptr};
    MultiDegree chi(Eigen::VectorXi::Ones(g));
    for (int r = 0; r <= g; ++r) {
      auto cb = chain_basis(big, req, r, chi);
      std::size_t count = 0;
      for (const auto& rho : enumerate_rho(r, 1, g)) count += refinements(rho).size();
      CHECK(count == static_cast<std::size_t>(cb.dim()));
    }
  }
}

TEST_CASE("form morphism of complexes, A1 single factor") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A1"));
  std::vector<Weight> w{wt(ctx.cartan, {2})};
  auto tables = build_quotient_tables(ctx, w, 4);
  for (int a = 0; a <= 4; ++a) {
    auto rep = s_morphism_check(ctx, w, tables, md({a}));
    CHECK(rep.chain_map);
    CHECK(rep.ranks_match);
    CHECK(rep.kernel_matches);
    CHECK(rep.image_commutes);
  }
}

TEST_CASE("form morphism of complexes, A2 and two factors") {
  auto a2 = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> w{wt(a2.cartan, {2, 1})};
  auto tables = build_quotient_tables(a2, w, 3);
  for (const auto& nu : enumerate_multidegrees(2, 3)) {
    auto rep = s_morphism_check(a2, w, tables, nu);
    CHECK(rep.all());
  }

  auto a1 = cyclo_ctx(5, CartanData::preset("A1"));
  std::vector<Weight> pair{wt(a1.cartan, {2}), wt(a1.cartan, {1})};
  auto tables2 = build_quotient_tables(a1, pair, 3);
  for (int a = 0; a <= 3; ++a) {
    auto rep = s_morphism_check(a1, pair, tables2, md({a}));
    CHECK(rep.all());
  }
}
