#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshuffle/tensor_module.hpp"

using namespace qsh;

namespace {

template <class Ring>
Lin<typename Ring::Scalar> word_elt(const Ctx<Ring>& ctx, const Word& w) {
  Lin<typename Ring::Scalar> x;
  x.emplace(w, ctx.ring.one());
  return x;
}

Weight wt(const CartanData& c, std::initializer_list<long> vals) {
  return weight_from_coordinates(c, std::vector<long>(vals));
}

Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, rank - 1);
  Word w(static_cast<std::size_t>(len));
  for (auto& x : w) x = d(rng);
  return w;
}

}  // namespace

TEST_CASE("tensor action basics") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> ws{wt(ctx.cartan, {2, 0}), wt(ctx.cartan, {1, 1})};
  LinT<Cyclo> m;
  m.emplace(WordTuple{Word{}, Word{1}}, ctx.ring.one());

  // identity tuple leaves the element unchanged
  LinT<Cyclo> unit;
  unit.emplace(WordTuple{Word{}, Word{}}, ctx.ring.one());
  CHECK(equal_elements(tensor_algebra_action(ctx, ws, unit, m), m));

  // (theta_i, 1) on (v, theta_j v): the acting degree sits in slot 0, so no
  // crossing twist appears
  LinT<Cyclo> u;
  u.emplace(WordTuple{Word{0}, Word{}}, ctx.ring.one());
  auto r = tensor_algebra_action(ctx, ws, u, m);
  CHECK(r.size() == 1);
  CHECK(r.at(WordTuple{Word{0}, Word{1}}) == Cyclo(1));

  // (1, theta_i) on (v, v): slot-1 action crosses slot 0, twisting by
  // zeta^{-<Lambda_0, i>}
  LinT<Cyclo> m0;
  m0.emplace(WordTuple{Word{}, Word{}}, ctx.ring.one());
  LinT<Cyclo> u1;
  u1.emplace(WordTuple{Word{}, Word{0}}, ctx.ring.one());
  auto r1 = tensor_algebra_action(ctx, ws, u1, m0);
  CHECK(r1.at(WordTuple{Word{}, Word{0}}) == ctx.zpow(-ws[0][0]));
}

TEST_CASE("n = 1 reduces to the plain module action") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> ws{wt(ctx.cartan, {2, 3})};
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Word x = random_word(rng, 2, 2);
    Word y = random_word(rng, 2, 2);
    LinT<Cyclo> m;
    m.emplace(WordTuple{y}, ctx.ring.one());
    auto acted = f_action(ctx, ws, word_elt(ctx, x), m);
    CHECK(acted.size() == 1);
    CHECK(acted.begin()->first[0] == concat(x, y));
    CHECK(acted.begin()->second == Cyclo(1));
  }
}

TEST_CASE("unit acts as the identity") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> ws{wt(ctx.cartan, {2, 0}), wt(ctx.cartan, {1, 1})};
  LinT<Cyclo> m;
  m.emplace(WordTuple{Word{0}, Word{1, 0}}, ctx.ring.one());
  CHECK(equal_elements(f_action(ctx, ws, unit_element(ctx.ring.one()), m), m));
}

TEST_CASE("f_action on a pair of Vermas") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A1"));
  std::vector<Weight> ws{wt(ctx.cartan, {2}), wt(ctx.cartan, {3})};
  LinT<Cyclo> vac;
  vac.emplace(WordTuple{Word{}, Word{}}, ctx.ring.one());
  auto r = f_action(ctx, ws, generator(0, ctx.ring.one()), vac);
  // Delta(theta) = theta (x) 1 + 1 (x) theta, the second summand twisted by
  // zeta^{-<Lambda_0, i>}
  CHECK(r.size() == 2);
  CHECK(r.at(WordTuple{Word{0}, Word{}}) == Cyclo(1));
  CHECK(r.at(WordTuple{Word{}, Word{0}}) == ctx.zpow(-2));
}

TEST_CASE("module axiom for the twisted tensor algebra") {
  std::mt19937 rng(17);
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> ws{wt(ctx.cartan, {2, 1}), wt(ctx.cartan, {0, 3})};
  for (int trial = 0; trial < 12; ++trial) {
    // homogeneous tuple factors
    WordTuple tu{random_word(rng, 2, trial % 2 + 1), random_word(rng, 2, (trial / 2) % 2)};
    WordTuple tv{random_word(rng, 2, (trial / 3) % 2), random_word(rng, 2, trial % 2)};
    LinT<Cyclo> u, v;
    u.emplace(tu, ctx.ring.one());
    v.emplace(tv, ctx.ring.one());
    LinT<Cyclo> m;
    m.emplace(WordTuple{random_word(rng, 2, 1), random_word(rng, 2, 1)}, ctx.ring.one());
    auto lhs = tensor_algebra_action(ctx, ws, twisted_tensor_multiply(ctx, u, v), m);
    auto rhs = tensor_algebra_action(ctx, ws, u, tensor_algebra_action(ctx, ws, v, m));
    CHECK(equal_elements(lhs, rhs));
  }
}

TEST_CASE("f_action is associative") {
  std::mt19937 rng(29);
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> ws{wt(ctx.cartan, {2, 1}), wt(ctx.cartan, {1, 0})};
  for (int trial = 0; trial < 12; ++trial) {
    Word x = random_word(rng, 2, 1 + trial % 2);
    Word y = random_word(rng, 2, 1 + (trial / 2) % 2);
    LinT<Cyclo> m;
    m.emplace(WordTuple{random_word(rng, 2, 1), random_word(rng, 2, 1)}, ctx.ring.one());
    auto lhs = f_action(ctx, ws, multiply(word_elt(ctx, x), word_elt(ctx, y)), m);
    auto rhs = f_action(ctx, ws, word_elt(ctx, x), f_action(ctx, ws, word_elt(ctx, y), m));
    CHECK(equal_elements(lhs, rhs));
  }
}

TEST_CASE("three tensor factors") {
  std::mt19937 rng(41);
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> ws{wt(ctx.cartan, {2, 1}), wt(ctx.cartan, {0, 3}), wt(ctx.cartan, {1, 1})};
  for (int trial = 0; trial < 8; ++trial) {
    Word x = random_word(rng, 2, 1 + trial % 2);
    Word y = random_word(rng, 2, 1 + (trial / 2) % 2);
    LinT<Cyclo> m;
    m.emplace(WordTuple{random_word(rng, 2, 1), Word{}, random_word(rng, 2, 1)}, ctx.ring.one());
    auto lhs = f_action(ctx, ws, multiply(word_elt(ctx, x), word_elt(ctx, y)), m);
    auto rhs = f_action(ctx, ws, word_elt(ctx, x), f_action(ctx, ws, word_elt(ctx, y), m));
    CHECK(equal_elements(lhs, rhs));
    // module axiom for the three-fold twisted algebra
    WordTuple tu{random_word(rng, 2, 1), Word{}, random_word(rng, 2, trial % 2)};
    WordTuple tv{Word{}, random_word(rng, 2, 1), random_word(rng, 2, 1)};
    LinT<Cyclo> u, v;
    u.emplace(tu, ctx.ring.one());
    v.emplace(tv, ctx.ring.one());
    auto l2 = tensor_algebra_action(ctx, ws, twisted_tensor_multiply(ctx, u, v), m);
    auto r2 = tensor_algebra_action(ctx, ws, u, tensor_algebra_action(ctx, ws, v, m));
    CHECK(equal_elements(l2, r2));
  }
}

TEST_CASE("product form on tensors") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  std::vector<Weight> ws{wt(ctx.cartan, {2, 0}), wt(ctx.cartan, {1, 1})};
  WordTuple triv{Word{}, Word{}};
  CHECK(form_s_tensor(ctx, 0, ws, triv, triv) == Cyclo(1));

  WordTuple a{Word{0}, Word{}};
  CHECK(form_s_tensor(ctx, 0, ws, a, a) == ctx.ring.bracket(2));
  WordTuple b{Word{}, Word{0}};
  CHECK(form_s_tensor(ctx, 0, ws, a, b).is_zero());

  // mixed algebra/module slots
  WordTuple c{Word{1}, Word{0}, Word{}};
  CHECK(form_s_tensor(ctx, 1, ws, c, c) == ctx.ring.bracket(2));
}

TEST_CASE("form intertwines the action with the dual action") {
  // S(x.m, m') = sum over Delta_Lambda(m') of S(x, -) S_Lambda(m, -),
  // the n = 1 shadow of the commuting square; n = 2 is exercised through the
  // morphism-of-complexes tests.
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  Weight lam = wt(ctx.cartan, {2, 3});
  std::vector<Weight> ws{lam};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Word x = random_word(rng, 2, 1 + trial % 2);
    Word m = random_word(rng, 2, 1 + (trial / 2) % 2);
    Word mp = random_word(rng, 2, x.size() + m.size());
    Cyclo lhs = form_s_lambda_rec(ctx, lam, concat(x, m), mp);
    Cyclo rhs(0);
    for (const auto& [t, c] : coaction_word(ctx, lam, mp))
      rhs += c * form_s_rec(ctx, x, t[0]) * form_s_lambda_rec(ctx, lam, m, t[1]);
    CHECK(lhs == rhs);
  }
}
