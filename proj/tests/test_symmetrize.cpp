#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/symmetrize.hpp"

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

}  // namespace

TEST_CASE("unfoldings") {
  CartanData a1 = CartanData::preset("A1");
  Unfolding u = unfold(a1, md({2}));
  CHECK(u.pi == std::vector<int>{0, 0});
  CHECK(sigma_pi_elements(u).size() == 2);
  CHECK(u.j_cartan.dot(0, 1) == 2);

  CartanData a2 = CartanData::preset("A2");
  Unfolding v = unfold(a2, md({1, 1}));
  CHECK(v.pi == std::vector<int>{0, 1});
  CHECK(sigma_pi_elements(v).size() == 1);
  CHECK(v.j_cartan.dot(0, 1) == -1);

  Unfolding e = unfold(a2, md({0, 0}));
  CHECK(e.pi.empty());
  CHECK(sigma_pi_elements(e).size() == 1);
}

TEST_CASE("averaging and projection") {
  CartanData a1 = CartanData::preset("A1");
  auto ctx = cyclo_ctx(5, a1);
  Unfolding u = unfold(a1, md({2}));

  Lin<Cyclo> x;
  x.emplace(Word{0, 0}, ctx.ring.one());
  auto avg = average(u, x);
  CHECK(avg.size() == 2);
  CHECK(avg.count(Word{0, 1}) == 1);
  CHECK(avg.count(Word{1, 0}) == 1);

  // project . average = card(Sigma_pi) . id
  auto round = project_element(u, avg);
  CHECK(equal_elements(round, Lin<Cyclo>{{Word{0, 0}, Cyclo(2)}}));

  // skew combination projects to zero
  Lin<Cyclo> skew;
  add_term(skew, Word{0, 1}, ctx.ring.one());
  add_term(skew, Word{1, 0}, Cyclo(-1));
  CHECK(project_element(u, skew).empty());

  // multiplicity-free degrees relabel by a single lift
  CartanData a2 = CartanData::preset("A2");
  Unfolding v = unfold(a2, md({1, 1}));
  Lin<Cyclo> y;
  y.emplace(Word{1, 0}, ctx.ring.one());
  CHECK(average(v, y).size() == 1);

  Lin<Cyclo> bad;
  bad.emplace(Word{0}, ctx.ring.one());
  CHECK_THROWS_AS(average(u, bad), SizeMismatch);
}

TEST_CASE("averaging is injective onto the invariants") {
  CartanData a2 = CartanData::preset("A2");
  auto ctx = cyclo_ctx(5, a2);
  for (const auto& nu : enumerate_multidegrees(2, 4)) {
    if (nu.is_zero()) continue;
    Unfolding u = unfold(a2, nu);
    auto i_basis = word_basis(nu);
    auto j_basis = word_basis(chi_j(u));
    std::map<Word, int> j_index;
    for (std::size_t k = 0; k < j_basis.size(); ++k)
      j_index.emplace(j_basis[k], static_cast<int>(k));
    // matrix of the averaging map
    Mat<Cyclo> a = zero_matrix<Cyclo>(static_cast<Eigen::Index>(j_basis.size()),
                                      static_cast<Eigen::Index>(i_basis.size()));
    for (std::size_t c = 0; c < i_basis.size(); ++c) {
      Lin<Cyclo> x;
      x.emplace(i_basis[c], ctx.ring.one());
      for (const auto& [w, coeff] : average(u, x)) a(j_index.at(w), static_cast<Eigen::Index>(c)) = coeff;
    }
    CHECK(rank(ctx.ring, a) == static_cast<int>(i_basis.size()));

    // image dimension equals the dimension of the invariants
    auto sigmas = sigma_pi_elements(u);
    Mat<Cyclo> stacked = zero_matrix<Cyclo>(
        static_cast<Eigen::Index>(j_basis.size() * sigmas.size()),
        static_cast<Eigen::Index>(j_basis.size()));
    Eigen::Index at = 0;
    for (const auto& sigma : sigmas) {
      for (std::size_t c = 0; c < j_basis.size(); ++c) {
        Word w = j_basis[c];
        for (int& letter : w) letter = sigma[static_cast<std::size_t>(letter)];
        stacked(at + j_index.at(w), static_cast<Eigen::Index>(c)) += ctx.ring.one();
        stacked(at + static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c)) -=
            ctx.ring.one();
      }
      at += static_cast<Eigen::Index>(j_basis.size());
    }
    Mat<Cyclo> inv = kernel_basis(ctx.ring, stacked);
    CHECK(static_cast<int>(inv.cols()) == static_cast<int>(i_basis.size()));
  }
}

TEST_CASE("compatibility squares") {
  auto a1 = cyclo_ctx(5, CartanData::preset("A1"));
  CHECK(check_squares(a1, md({2}), {wt(a1.cartan, {2})}, 1).all_pass());
  CHECK(check_squares(a1, md({3}), {wt(a1.cartan, {-1})}, 2).all_pass());

  auto a2 = cyclo_ctx(5, CartanData::preset("A2"));
  CHECK(check_squares(a2, md({1, 1}), {wt(a2.cartan, {2, 3})}, 1).all_pass());
  CHECK(check_squares(a2, md({2, 1}), {wt(a2.cartan, {1, 0})}, 1).all_pass());
}

TEST_CASE("averaged complexes have the homology of the source") {
  auto a1 = cyclo_ctx(5, CartanData::preset("A1"));
  Weight lam = wt(a1.cartan, {2});
  ComplexRequest<CycloField> req{AlgebraKind::Free, ModuleKind::Verma, {lam}, nullptr};
  for (int a = 1; a <= 4; ++a) {
    Unfolding u = unfold(a1.cartan, md({a}));
    auto direct = homology_dims(a1, build_complex(a1, req, md({a})));
    auto transported = invariant_homology_dims(a1, u, lam);
    CHECK(direct == transported);
  }

  auto a2 = cyclo_ctx(5, CartanData::preset("A2"));
  Weight lam2 = wt(a2.cartan, {2, 1});
  ComplexRequest<CycloField> req2{AlgebraKind::Free, ModuleKind::Verma, {lam2}, nullptr};
  Unfolding u2 = unfold(a2.cartan, md({2, 1}));
  CHECK(homology_dims(a2, build_complex(a2, req2, md({2, 1}))) ==
        invariant_homology_dims(a2, u2, lam2));
}
