#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshuffle/free_algebra.hpp"

using namespace qsh;

namespace {

Word random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, rank - 1);
  Word w(static_cast<std::size_t>(len));
  for (auto& x : w) x = d(rng);
  return w;
}

template <class Ring>
Lin<typename Ring::Scalar> word_elt(const Ctx<Ring>& ctx, const Word& w) {
  Lin<typename Ring::Scalar> x;
  x.emplace(w, ctx.ring.one());
  return x;
}

}  // namespace

TEST_CASE("free multiplication") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  auto one = unit_element(ctx.ring.one());
  auto ti = generator(0, ctx.ring.one());
  auto tj = generator(1, ctx.ring.one());
  CHECK(multiply(ti, tj).count(Word{0, 1}) == 1);
  CHECK(equal_elements(multiply(one, tj), tj));
  Lin<Cyclo> sum = ti;
  add_scaled(sum, tj, ctx.ring.one());
  auto prod = multiply(sum, ti);
  CHECK(prod.size() == 2);
  CHECK(prod.count(Word{0, 0}) == 1);
  CHECK(prod.count(Word{1, 0}) == 1);
}

TEST_CASE("twisting numbers") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  CHECK(twisting_number(ctx, Word{0, 1, 0}, Permutation{0, 1, 2}) == Cyclo(1));
  CHECK(twisting_number(ctx, Word{0, 1}, Permutation{1, 0}) == ctx.zdot(0, 1));
  auto a1 = cyclo_ctx(7, CartanData::preset("A1"));
  CHECK(twisting_number(a1, Word{0, 0, 0}, Permutation{2, 1, 0}) == a1.zpow(6));
  CHECK_THROWS_AS(twisting_number(ctx, Word{0, 1}, Permutation{0}), SizeMismatch);
}

TEST_CASE("coproduct on generators and short words") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  auto d1 = coproduct(ctx, unit_element(ctx.ring.one()));
  CHECK(d1.size() == 1);
  CHECK(d1.count(WordTuple{Word{}, Word{}}) == 1);

  auto di = coproduct(ctx, generator(0, ctx.ring.one()));
  CHECK(di.size() == 2);
  CHECK(di.at(WordTuple{Word{0}, Word{}}) == Cyclo(1));
  CHECK(di.at(WordTuple{Word{}, Word{0}}) == Cyclo(1));

  auto dij = coproduct(ctx, word_elt(ctx, Word{0, 1}));
  CHECK(dij.size() == 4);
  CHECK(dij.at(WordTuple{Word{0, 1}, Word{}}) == Cyclo(1));
  CHECK(dij.at(WordTuple{Word{0}, Word{1}}) == Cyclo(1));
  CHECK(dij.at(WordTuple{Word{1}, Word{0}}) == ctx.zdot(0, 1));
  CHECK(dij.at(WordTuple{Word{}, Word{0, 1}}) == Cyclo(1));
}

TEST_CASE("iterated coproduct positive part enumerates permutations") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  CHECK(equal_elements(iterated_coproduct(ctx, word_elt(ctx, Word{0, 1, 1}), 1),
                       LinT<Cyclo>{{WordTuple{Word{0, 1, 1}}, Cyclo(1)}}));

  auto d2 = positive_part(iterated_coproduct(ctx, word_elt(ctx, Word{0, 1}), 2));
  CHECK(d2.size() == 2);
  CHECK(d2.at(WordTuple{Word{0}, Word{1}}) == Cyclo(1));
  CHECK(d2.at(WordTuple{Word{1}, Word{0}}) == ctx.zdot(0, 1));

  // depth-3 word with distinct letters over A3: six terms, each the twisting
  // number of the permutation that produces the arrangement
  auto a3 = cyclo_ctx(5, CartanData::preset("A3"));
  Word k{0, 1, 2};
  auto d3 = positive_part(iterated_coproduct(a3, word_elt(a3, k), 3));
  CHECK(d3.size() == 6);
  Permutation pi{0, 1, 2};
  std::sort(pi.begin(), pi.end());
  do {
    WordTuple t{Word{k[static_cast<std::size_t>(pi[0])]}, Word{k[static_cast<std::size_t>(pi[1])]},
                Word{k[static_cast<std::size_t>(pi[2])]}};
    CHECK(d3.at(t) == twisting_number(a3, k, pi));
  } while (std::next_permutation(pi.begin(), pi.end()));
}

TEST_CASE("coproduct is a morphism for the twisted product") {
  std::mt19937 rng(42);
  for (const char* preset : {"A2", "B2"}) {
    auto ctx = cyclo_ctx(5, CartanData::preset(preset));
    for (int trial = 0; trial < 15; ++trial) {
      Word wx = random_word(rng, ctx.rank(), 1 + trial % 3);
      Word wy = random_word(rng, ctx.rank(), 1 + (trial / 3) % 3);
      auto lhs = coproduct(ctx, multiply(word_elt(ctx, wx), word_elt(ctx, wy)));
      auto rhs = twisted_tensor_multiply(ctx, coproduct(ctx, word_elt(ctx, wx)),
                                         coproduct(ctx, word_elt(ctx, wy)));
      CHECK(equal_elements(lhs, rhs));
    }
  }
}

TEST_CASE("coassociativity") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  for (const auto& nu : enumerate_multidegrees(2, 4)) {
    for (const Word& w : word_basis(nu)) {
      // (Delta (x) 1) Delta and (1 (x) Delta) Delta both equal Delta^{(3)}
      LinT<Cyclo> left, right;
      for (const auto& [t, c] : coproduct(ctx, word_elt(ctx, w))) {
        for (const auto& [t2, c2] : coproduct(ctx, word_elt(ctx, t[0])))
          add_term(left, WordTuple{t2[0], t2[1], t[1]}, Cyclo(c * c2));
        for (const auto& [t3, c3] : coproduct(ctx, word_elt(ctx, t[1])))
          add_term(right, WordTuple{t[0], t3[0], t3[1]}, Cyclo(c * c3));
      }
      auto d3 = iterated_coproduct(ctx, word_elt(ctx, w), 3);
      CHECK(equal_elements(left, d3));
      CHECK(equal_elements(right, d3));
    }
  }
}

TEST_CASE("delta operators") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  CHECK(equal_elements(delta_i(ctx, 0, generator(0, ctx.ring.one())),
                       unit_element(ctx.ring.one())));
  CHECK(delta_i(ctx, 0, generator(1, ctx.ring.one())).empty());
  CHECK(delta_i(ctx, 0, unit_element(ctx.ring.one())).empty());
  CHECK(equal_elements(delta_i(ctx, 0, word_elt(ctx, Word{0, 1})), generator(1, ctx.ring.one())));

  // twisted Leibniz rule on random pairs
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Word wx = random_word(rng, 2, 1 + trial % 3);
    Word wy = random_word(rng, 2, 1 + (trial / 2) % 3);
    for (int i = 0; i < 2; ++i) {
      auto lhs = delta_i(ctx, i, multiply(word_elt(ctx, wx), word_elt(ctx, wy)));
      Lin<Cyclo> rhs = multiply(delta_i(ctx, i, word_elt(ctx, wx)), word_elt(ctx, wy));
      long e = 0;
      for (int a : wx) e += ctx.dot(a, i);
      add_scaled(rhs, multiply(word_elt(ctx, wx), delta_i(ctx, i, word_elt(ctx, wy))),
                 Cyclo(ctx.zpow(e)));
      CHECK(equal_elements(lhs, rhs));
    }
  }
}

TEST_CASE("form on words: defining examples") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  CHECK(form_s_perm(ctx, Word{}, Word{}) == Cyclo(1));
  CHECK(form_s_rec(ctx, Word{0}, Word{0}) == Cyclo(1));
  CHECK(form_s_rec(ctx, Word{0}, Word{1}).is_zero());
  CHECK(form_s_perm(ctx, Word{0, 1}, Word{1, 0}) == ctx.zdot(0, 1));
  CHECK(form_s_perm(ctx, Word{0, 0}, Word{0, 0}) == Cyclo(1) + ctx.zpow(2));

  auto a1 = cyclo_ctx(5, CartanData::preset("A1"));
  Cyclo expected = (Cyclo(1) + a1.zpow(2) + a1.zpow(4)) * (Cyclo(1) + a1.zpow(2));
  CHECK(form_s_rec(a1, Word{0, 0, 0}, Word{0, 0, 0}) == expected);
  CHECK(form_s_perm(a1, Word{0, 0, 0}, Word{0, 0, 0}) == expected);
}

TEST_CASE("dual-algorithm equality, exhaustive to depth 4") {
  for (const char* preset : {"A1", "A1xA1", "A2", "B2"}) {
    auto ctx = cyclo_ctx(5, CartanData::preset(preset));
    for (const auto& nu : enumerate_multidegrees(ctx.rank(), 4)) {
      auto basis = word_basis(nu);
      for (const auto& a : basis)
        for (const auto& b : basis) {
          CHECK(form_s_perm(ctx, a, b) == form_s_rec(ctx, a, b));
          CHECK(form_s_rec(ctx, a, b) == form_s_rec(ctx, b, a));
        }
    }
  }
}

TEST_CASE("orthogonality of distinct contents") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  CHECK(form_s_rec(ctx, Word{0, 1}, Word{0, 0}).is_zero());
  CHECK(form_s_perm(ctx, Word{0}, Word{0, 1}).is_zero());
}

TEST_CASE("permutation sum guard") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A1"));
  Word big(static_cast<std::size_t>(kPermutationGuard + 1), 0);
  CHECK_THROWS_AS(form_s_perm(ctx, big, big), EnumerationGuard);
}

TEST_CASE("adjunction in both slots on random triples") {
  std::mt19937 rng(9);
  auto ctx = cyclo_ctx(7, CartanData::preset("A2"));
  for (int trial = 0; trial < 25; ++trial) {
    Word x = random_word(rng, 2, 1 + trial % 2);
    Word xp = random_word(rng, 2, 1 + (trial / 2) % 2);
    Word y = random_word(rng, 2, x.size() + xp.size());
    // S(x x', y) = S(x (x) x', Delta(y))
    Cyclo lhs = form_s_rec(ctx, concat(x, xp), y);
    Cyclo rhs(0);
    for (const auto& [t, c] : coproduct(ctx, word_elt(ctx, y)))
      rhs += c * form_s_rec(ctx, x, t[0]) * form_s_rec(ctx, xp, t[1]);
    CHECK(lhs == rhs);
    // S(y, x x') = S(Delta(y), x (x) x')
    Cyclo lhs2 = form_s_rec(ctx, y, concat(x, xp));
    CHECK(lhs2 == rhs);
  }
}

TEST_CASE("gram matrices") {
  auto a1 = cyclo_ctx(5, CartanData::preset("A1"));
  auto g1 = gram_matrix(a1, MultiDegree::unit(1, 0));
  CHECK(g1.rows() == 1);
  CHECK(g1(0, 0) == Cyclo(1));

  MultiDegree two_i(1);
  two_i.v[0] = 2;
  auto g2 = gram_matrix(a1, two_i);
  CHECK(g2(0, 0) == Cyclo(1) + a1.zpow(2));

  auto a2 = cyclo_ctx(5, CartanData::preset("A2"));
  MultiDegree ij(2);
  ij.v << 1, 1;
  auto g = gram_matrix(a2, ij);
  CHECK(g(0, 0) == Cyclo(1));
  CHECK(g(0, 1) == a2.zdot(0, 1));
  CHECK(g(1, 0) == a2.zdot(0, 1));
  CHECK(g(1, 1) == Cyclo(1));
  CHECK(is_zero_matrix<Cyclo>(Mat<Cyclo>(g - gram_matrix(a2, ij, true))));
}

TEST_CASE("dual algebra") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A2"));
  auto ti_star = generator(0, ctx.ring.one());
  auto one_star = unit_element(ctx.ring.one());
  CHECK(equal_elements(dual_multiply(ctx, ti_star, one_star), ti_star));

  auto tj_star = generator(1, ctx.ring.one());
  auto prod = dual_multiply(ctx, ti_star, tj_star);
  CHECK(prod.at(Word{0, 1}) == Cyclo(1));
  CHECK(prod.at(Word{1, 0}) == ctx.zdot(0, 1));
}

TEST_CASE("form map into the dual algebra") {
  auto ctx = cyclo_ctx(5, CartanData::preset("A1"));
  CHECK(equal_elements(s_map(ctx, generator(0, ctx.ring.one())), generator(0, ctx.ring.one())));
  CHECK(equal_elements(s_map(ctx, unit_element(ctx.ring.one())), unit_element(ctx.ring.one())));
  auto sq = s_map(ctx, word_elt(ctx, Word{0, 0}));
  CHECK(sq.at(Word{0, 0}) == Cyclo(1) + ctx.zpow(2));

  // multiplicativity: s(xy) = s(x) s(y) in the dual algebra
  std::mt19937 rng(13);
  auto a2 = cyclo_ctx(5, CartanData::preset("A2"));
  for (int trial = 0; trial < 15; ++trial) {
    Word x = random_word(rng, 2, 1 + trial % 2);
    Word y = random_word(rng, 2, 1 + (trial / 2) % 2);
    auto lhs = s_map(a2, multiply(word_elt(a2, x), word_elt(a2, y)));
    auto rhs = dual_multiply(a2, s_map(a2, word_elt(a2, x)), s_map(a2, word_elt(a2, y)));
    CHECK(equal_elements(lhs, rhs));
  }
}

TEST_CASE("rank zero degenerates to the ground field") {
  auto ctx = cyclo_ctx(5, CartanData());
  CHECK(enumerate_multidegrees(0, 4).size() == 1);
  MultiDegree zero(0);
  CHECK(word_basis(zero).size() == 1);
  CHECK(form_s_rec(ctx, Word{}, Word{}) == Cyclo(1));
  auto g = gram_matrix(ctx, zero);
  CHECK(g.rows() == 1);
  CHECK(g(0, 0) == Cyclo(1));
}

TEST_CASE("generic regime mirrors the cyclotomic formulas") {
  auto ctx = generic_ctx(CartanData::preset("A2"));
  CHECK(form_s_perm(ctx, Word{0, 1}, Word{1, 0}) == Laurent::q_power(-1));
  CHECK(form_s_rec(ctx, Word{0, 1}, Word{1, 0}) == Laurent::q_power(-1));
  auto d = coproduct(ctx, generator(0, ctx.ring.one()));
  CHECK(d.size() == 2);
}
