#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/homogenize.hpp"
#include "solvdeg/invariants.hpp"

using namespace solvdeg;
using testing::P;

namespace {

MonomialIdeal mono_ideal(std::size_t n, std::initializer_list<Monomial> gens) { return MonomialIdeal(n, gens); }

// (x^2, xy, xz, y^3) in k[x, y, z]
MonomialIdeal betti_fixture() { return mono_ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}}); }

}  // namespace

TEST_CASE("monomial ideals minimalize") {
  const auto I = mono_ideal(2, {{2, 0}, {3, 1}, {2, 0}, {0, 1}});
  CHECK(I.gens().size() == 2);
  CHECK(I.contains(Monomial{5, 0}));
  CHECK_FALSE(I.contains(Monomial{1, 0}));
}

TEST_CASE("Krull dimension of monomial quotients") {
  CHECK(monomial_krull_dim(betti_fixture()) == 1);
  CHECK(monomial_krull_dim(MonomialIdeal(4, {})) == 4);
  CHECK(monomial_krull_dim(mono_ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 0);
  CHECK(monomial_krull_dim(mono_ideal(2, {{0, 0}})) == -1);
}

TEST_CASE("zero-dimensionality") {
  auto R = make_ring(5, {"x3", "x2", "x1"});
  const auto I = testing::ideal_of(R, {"x1^2 - x2", "x2^3 - x3"});
  CHECK_FALSE(is_zero_dimensional(I, false));
  const auto J = testing::ideal_of(R, {"x1^2 - x2", "x2^3 - x3", "x1^5 - x1", "x2^5 - x2", "x3^5 - x3"});
  CHECK(is_zero_dimensional(J, false));
  auto S = make_ring(7, {"x", "y", "z"});
  CHECK(is_zero_dimensional(testing::ideal_of(S, {"x^2", "x*y", "x*z", "y^3"}), true));
  CHECK_THROWS_AS(is_zero_dimensional(testing::ideal_of(S, {"x^2 - 1"}), true), PreconditionError);
}

TEST_CASE("Hilbert series examples") {
  const auto hs = hilbert_series(betti_fixture());
  CHECK(hs.h == std::vector<long long>{1, 2});
  CHECK(hs.ell == 1);
  CHECK(hs.ireg() == 1);
  CHECK(hs.hilbert_function(4) == std::vector<long long>{1, 3, 3, 3, 3});

  const auto zero = hilbert_series(MonomialIdeal(3, {}));
  CHECK(zero.h == std::vector<long long>{1});
  CHECK(zero.ell == 3);

  const auto x = hilbert_series(mono_ideal(1, {{1}}));
  CHECK(x.h == std::vector<long long>{1});
  CHECK(x.ell == 0);
  CHECK(x.ireg() == 1);

  const auto sq = hilbert_series(mono_ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(sq.h == std::vector<long long>{1, 2});
  CHECK(sq.ell == 0);
  CHECK(sq.ireg() == 2);

  const auto unit = hilbert_series(mono_ideal(2, {{0, 0}}));
  CHECK(unit.h.empty());
}

TEST_CASE("index of regularity through the initial ideal") {
  auto S = make_ring(7, {"x", "y", "z"});
  CHECK(index_of_regularity(testing::ideal_of(S, {"x^2", "x*y", "x*z", "y^3"})) == 1);
  auto T = make_ring(7, {"x", "y"});
  CHECK(index_of_regularity(testing::ideal_of(T, {"x^2", "x*y", "y^2"})) == 2);
  auto U = make_ring(7, {"x"});
  CHECK(index_of_regularity(testing::ideal_of(U, {"x"})) == 1);
  CHECK_THROWS_AS(index_of_regularity(testing::ideal_of(U, {"x + 1"})), PreconditionError);
}

TEST_CASE("Hilbert series matches standard monomial counting") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 50; ++k) {
    const auto I = oracle::random_monomial_ideal(rng);
    const auto hf = hilbert_series(I).hilbert_function(12);
    for (unsigned d = 0; d <= 12; ++d) CHECK(hf[d] == oracle::standard_monomials(I, d));
  }
}

TEST_CASE("Betti table of the fixture") {
  const auto B = betti_table(betti_fixture());
  CHECK(B(0, 2) == 3);
  CHECK(B(0, 3) == 1);
  CHECK(B(1, 3) == 3);
  CHECK(B(1, 4) == 1);
  CHECK(B(2, 4) == 1);
  CHECK(B.entries().size() == 5);
  CHECK(B.pd() == 2);
  CHECK(B.reg() == 3);
  CHECK(cm_regularity(betti_fixture()) == 3);
}

TEST_CASE("small Betti tables") {
  const auto xy = betti_table(mono_ideal(2, {{1, 0}, {0, 1}}));
  CHECK(xy(0, 1) == 2);
  CHECK(xy(1, 2) == 1);
  CHECK(xy.entries().size() == 2);
  CHECK(xy.reg() == 1);

  const auto principal = betti_table(mono_ideal(3, {{1, 2, 0}}));
  CHECK(principal(0, 3) == 1);
  CHECK(principal.entries().size() == 1);

  for (unsigned p : {2u, 3u, 5u}) CHECK(cm_regularity(mono_ideal(2, {{p, 0}, {0, p}})) == static_cast<int>(2 * p - 1));
  CHECK_THROWS_AS(cm_regularity(MonomialIdeal(2, {})), UndefinedInvariant);
}

TEST_CASE("Betti numbers are consistent with the Hilbert series") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 40; ++k) {
    const auto I = oracle::random_monomial_ideal(rng);
    if (I.is_unit()) continue;
    const auto B = betti_table(I);
    const auto hs = hilbert_series(I);
    // numerator over (1 - z)^n is 1 - sum (-1)^i beta_ij z^j
    std::vector<long long> N = hs.h;
    for (int e = hs.ell; e < static_cast<int>(I.nvars()); ++e) {
      N.push_back(0);
      for (std::size_t i = N.size() - 1; i > 0; --i) N[i] -= N[i - 1];
    }
    std::vector<long long> expect(N.size() + 20, 0);
    expect[0] = 1;
    for (const auto& [ij, v] : B.entries()) {
      REQUIRE(ij.second < static_cast<int>(expect.size()));
      expect[ij.second] -= (ij.first % 2 == 0 ? 1 : -1) * v;
    }
    N.resize(expect.size(), 0);
    CHECK(N == expect);
    CHECK(B.pd() <= static_cast<int>(I.nvars()));
    CHECK(hs.ireg() <= B.reg());
  }
}

TEST_CASE("regularity through the initial ideal") {
  auto R = make_ring(7, {"x", "y"});
  Homogenization h(R);
  const auto tilde = h.tilde(testing::ideal_of(R, {"x^2 - 1", "x*y + x"}));
  const auto rep = reg_via_initial(tilde);
  CHECK(rep.zero_dimensional);
  CHECK(rep.exact);
  CHECK(rep.value >= max_gb_degree(tilde, TermOrder::drl_t_last()));

  auto T = make_ring(3, {"x", "y"});
  const auto J = testing::ideal_of(T, {"x^3", "y^3"});
  CHECK(reg_via_initial(J).value == 5);
  auto V = make_ring(3, {"x", "y", "z"});
  const auto rep2 = reg_via_initial(testing::ideal_of(V, {"x*y"}), true);
  CHECK(rep2.value == cm_regularity(mono_ideal(3, {{1, 1, 0}})));
  CHECK_FALSE(rep2.zero_dimensional);
  CHECK(rep2.exact);
  CHECK(reg_via_initial(testing::ideal_of(V, {"x*y"})).label() == "upper-bound heuristic");
}

TEST_CASE("Faugere degree of regularity") {
  auto R = make_ring(101, {"x", "y"});
  CHECK(dreg_faugere(testing::ideal_of(R, {"x^2 - 3", "y^2 - 7"})) == 3);
  CHECK(dreg_faugere(testing::ideal_of(R, {"x^2", "y^2"})) == 3);
  CHECK_THROWS_AS(dreg_faugere(testing::ideal_of(R, {"x*y - 1", "x^2 - y"})), UndefinedInvariant);
}
