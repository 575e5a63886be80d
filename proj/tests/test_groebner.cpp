#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/homogenize.hpp"

using namespace solvdeg;
using testing::P;

TEST_CASE("buchberger on small ideals") {
  auto R = make_ring(5, {"x3", "x2", "x1"});
  const auto I = testing::ideal_of(R, {"x1^2 - x2", "x2^3 - x3"});
  const auto G = buchberger(I, TermOrder::lex());
  REQUIRE(G.elements.size() == 2);
  // leading terms x2 and x3; the reduced basis also clears x2^3 from the tail
  CHECK(G.elements[0] == P(R, "x2 - x1^2"));
  CHECK(G.elements[1] == P(R, "x3 - x1^6"));
  CHECK(is_groebner(I.gens(), TermOrder::lex()));

  auto Rx = make_ring(7, {"x"});
  const auto Gx = buchberger(testing::ideal_of(Rx, {"x"}), TermOrder::drl());
  REQUIRE(Gx.elements.size() == 1);
  CHECK(Gx.elements[0] == P(Rx, "x"));
}

TEST_CASE("is_groebner decides by S-pairs") {
  auto R = make_ring(7, {"x", "y"});
  const std::vector<Polynomial> F{P(R, "x^2 - 1"), P(R, "x*y + x")};
  // S(f1, f2) = y*f1 - x*f2 = -x^2 - y, which reduces to -y - 1.
  CHECK_FALSE(is_groebner(F, TermOrder::lex()));
  CHECK(normal_form(s_polynomial(F[0], F[1], TermOrder::lex()), F, TermOrder::lex()) == P(R, "-y - 1"));
  CHECK(is_groebner(std::vector<Polynomial>{P(R, "x^3 + y")}, TermOrder::lex()));
  const auto G = buchberger(Ideal(R, F), TermOrder::lex());
  CHECK(is_groebner(G.elements, TermOrder::lex()));
  REQUIRE(G.elements.size() == 2);
  CHECK(G.elements[0] == P(R, "y + 1"));
  CHECK(G.elements[1] == P(R, "x^2 - 1"));
}

TEST_CASE("maxGB on the F_7 fixture") {
  auto R = make_ring(7, {"x", "y"});
  const auto I = testing::ideal_of(R, {"x^2 - 1", "x*y + x"});
  CHECK(max_gb_degree(I, TermOrder::drl()) == 2);
  Homogenization h(R);
  CHECK(max_gb_degree(h.tilde(I), TermOrder::drl_t_last()) == 3);
  CHECK(max_gb_degree(h.homogenized(I), TermOrder::drl_t_last()) == 2);

  auto Rn = make_ring(7, 4);
  CHECK(max_gb_degree(testing::ideal_of(Rn, {"x1", "x2", "x3", "x4"}), TermOrder::drl()) == 1);
}

TEST_CASE("unit ideal gives basis {1}") {
  auto R = make_ring(7, {"x", "y"});
  const auto G = buchberger(testing::ideal_of(R, {"x", "x + 1"}), TermOrder::drl());
  CHECK(G.is_unit());
  CHECK(G.max_degree() == 0);
}

namespace {

Ideal random_ideal(std::mt19937_64& rng, const RingPtr& R, std::size_t r, unsigned deg) {
  std::vector<Polynomial> gens;
  while (gens.size() < r) {
    auto g = testing::random_polynomial(rng, R, deg, 4);
    if (!g.is_zero()) gens.push_back(g);
  }
  return Ideal(R, gens);
}

}  // namespace

TEST_CASE("reduced bases are reduced, monic and certify") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    auto R = make_ring(101, 2 + k % 2);
    const auto I = random_ideal(rng, R, 2 + k % 2, 2 + k % 2);
    for (const auto ord : {TermOrder::drl(), TermOrder::lex()}) {
      const auto G = buchberger(I, ord);
      CHECK(is_groebner(G.elements, ord));
      for (std::size_t i = 0; i < G.elements.size(); ++i) {
        CHECK(G.elements[i].lc() == 1);
        for (std::size_t j = 0; j < G.elements.size(); ++j) {
          if (i == j) continue;
          for (const auto& t : G.elements[i].terms()) CHECK_FALSE(G.elements[j].lm().divides(t.mono));
        }
      }
      for (const auto& f : I.gens()) CHECK(ideal_contains(G, f));
    }
  }
}

TEST_CASE("basis is independent of generator order") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    auto R = make_ring(101, 3);
    const auto I = random_ideal(rng, R, 3, 2);
    auto gens = I.gens();
    std::reverse(gens.begin(), gens.end());
    CHECK(buchberger(I, TermOrder::drl()).elements == buchberger(Ideal(R, gens), TermOrder::drl()).elements);
  }
}

TEST_CASE("homogenizing a DRL basis gives a DRL_T_LAST basis and dehomogenizing transports back") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 30; ++k) {
    auto R = make_ring(101, 2 + k % 2);
    const auto I = random_ideal(rng, R, 2 + k % 2, 3);
    Homogenization h(R);
    const auto G = buchberger(I, TermOrder::drl());
    std::vector<Polynomial> Gh;
    for (const auto& g : G.elements) Gh.push_back(h.homogenize(g).with_order(TermOrder::drl_t_last()));
    CHECK(is_groebner(Gh, TermOrder::drl_t_last()));

    // any homogeneous J with phi(J) = I: take J = I~ and its DRL_T_LAST basis
    const auto J = buchberger(h.tilde(I), TermOrder::drl_t_last());
    std::vector<Polynomial> back;
    for (const auto& g : J.elements) {
      auto f = h.dehomogenize(g).with_order(TermOrder::drl());
      if (!f.is_zero()) back.push_back(f);
    }
    CHECK(is_groebner(back, TermOrder::drl()));
    CHECK(reduce_basis(back, TermOrder::drl()) == G.elements);
  }
}
