#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/homogenize.hpp"

using namespace solvdeg;
using testing::P;

TEST_CASE("homogenize and dehomogenize polynomials") {
  auto R = make_ring(7, {"x", "y"});
  Homogenization h(R);
  const auto& S = h.target();
  CHECK(S->vars == std::vector<std::string>{"x", "y", "t"});
  CHECK(h.homogenize(P(R, "x^2 - 1")) == P(S, "x^2 - t^2"));
  CHECK(h.homogenize(P(R, "x*y + x")) == P(S, "x*y + x*t"));
  CHECK(h.homogenize(P(R, "x*y + y^2")) == P(S, "x*y + y^2"));
  CHECK(h.dehomogenize(P(S, "x^2 - t^2")) == P(R, "x^2 - 1"));
  CHECK(h.dehomogenize(P(S, "t*x - x + t*y")) == P(R, "y"));
  CHECK(h.dehomogenize(P(S, "t^4")) == P(R, "1"));
  CHECK_THROWS_AS(h.homogenize(Polynomial(R)), ZeroPolynomialError);
}

TEST_CASE("homogenizing variable avoids name clashes") {
  auto R = make_ring(7, {"t", "x"});
  Homogenization h(R);
  CHECK(h.target()->vars.back() == "t_");
}

TEST_CASE("top parts") {
  auto R = make_ring(7, {"x", "y"});
  CHECK(top_part(P(R, "x^2 - 1")) == P(R, "x^2"));
  CHECK(top_part(P(R, "x*y + x")) == P(R, "x*y"));
  const auto I = testing::ideal_of(R, {"x^2 + y^2", "x*y"});
  CHECK(top_ideal(I).gens() == I.gens());
  auto R3 = make_ring(5, 3);
  CHECK(top_part(P(R3, "x1^2 - x2")) == P(R3, "x1^2"));
}

TEST_CASE("tilde and homogenized ideals") {
  auto R = make_ring(7, {"x", "y"});
  Homogenization h(R);
  const auto& S = h.target();
  const auto I = testing::ideal_of(R, {"x^2 - 1", "x*y + x"});
  const auto tilde = h.tilde(I);
  REQUIRE(tilde.size() == 2);
  CHECK(tilde[0] == P(S, "x^2 - t^2"));
  CHECK(tilde[1] == P(S, "x*y + x*t"));
  const auto Ih = h.homogenized(I);
  CHECK(same_ideal(Ih, testing::ideal_of(S, {"x^2 - t^2", "y + t"})));

  auto R3 = make_ring(5, 3);
  Homogenization h3(R3);
  const auto t3 = h3.tilde(testing::ideal_of(R3, {"x1^2 - x2", "x2^3 - x3"}));
  CHECK(t3[0] == P(h3.target(), "x1^2 - x2*t"));
  CHECK(t3[1] == P(h3.target(), "x2^3 - x3*t^2"));

  const auto hom = testing::ideal_of(R, {"x^2 - y^2"});
  CHECK(same_ideal(h.homogenized(hom), h.tilde(hom)));
  CHECK(h.tilde(hom)[0] == P(S, "x^2 - y^2"));
}

TEST_CASE("homogenization properties on random ideals") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    auto R = make_ring(101, 2 + k % 2);
    Homogenization h(R);
    std::vector<Polynomial> gens;
    while (gens.size() < 2) {
      auto g = testing::random_polynomial(rng, R, 3, 4);
      if (!g.is_zero()) gens.push_back(g);
    }
    const Ideal I(R, gens);
    for (const auto& f : gens) {
      CHECK(h.dehomogenize(h.homogenize(f)) == f);
      CHECK(h.homogenize(f).is_homogeneous());
      CHECK(h.homogenize(f).degree() == f.degree());
    }
    const auto tilde = h.tilde(I);
    const auto Ih = h.homogenized(I);
    CHECK(same_ideal(h.dehomogenize(tilde), I));
    CHECK(same_ideal(h.dehomogenize(Ih), I));
    const auto GIh = buchberger(Ih, TermOrder::drl_t_last());
    for (const auto& F : tilde.gens()) CHECK(ideal_contains(GIh, F));
    CHECK(is_groebner(Ih.gens(), TermOrder::drl_t_last()));
  }
}
