#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/solver.hpp"

using namespace solvdeg;
using testing::P;

namespace {

const TermOrder kLex = TermOrder::lex();

std::vector<Root> scan_roots(const Polynomial& f) {
  const auto& F = f.field();
  std::vector<Root> out;
  const auto var = *univariate_variable(f);
  for (Coeff x = 0; x < F.modulus(); ++x) {
    Polynomial rest = f;
    unsigned mult = 0;
    const auto lin = Polynomial::variable(f.ring(), var) - Polynomial::constant(f.ring(), x);
    while (true) {
      VarietyPoint pt(f.nvars(), 0);
      pt[var] = x;
      if (rest.is_zero() || rest.evaluate(pt) != 0) break;
      // exact division by (x_var - x)
      Polynomial q(f.ring(), kLex), r = rest.with_order(kLex);
      while (!r.is_zero()) {
        const auto& lt = r.leading();
        auto qm = lt.mono.quotient(Monomial::variable(f.nvars(), var));
        q = q + Polynomial::term(f.ring(), qm, lt.coeff, kLex);
        r = r - lin.with_order(kLex).mul_term(qm, lt.coeff);
        if (!r.is_zero() && r.degree() == 0) break;
      }
      rest = q;
      ++mult;
    }
    if (mult) out.push_back({x, mult});
  }
  return out;
}

}  // namespace

TEST_CASE("univariate roots") {
  auto R5 = make_ring(5, {"x1"});
  auto roots = univariate_roots(P(R5, "x1^5 - x1"));
  REQUIRE(roots.size() == 5);
  for (Coeff k = 0; k < 5; ++k) CHECK(roots[k] == Root{k, 1});

  auto R7 = make_ring(7, {"x"});
  CHECK(univariate_roots(P(R7, "(x - 2)^2")) == std::vector<Root>{{2, 2}});
  CHECK(univariate_roots(P(R7, "x^2 + 1")).empty());
  CHECK(univariate_roots(P(R7, "3")).empty());
  CHECK_THROWS_AS(univariate_roots(Polynomial(R7)), ZeroPolynomialError);

  auto R2 = make_ring(7, {"x", "y"});
  CHECK_THROWS_AS(univariate_roots(P(R2, "x*y - 1")), PreconditionError);
  CHECK(univariate_roots(P(R2, "y^3 - y")) == std::vector<Root>{{0, 1}, {1, 1}, {6, 1}});
}

TEST_CASE("univariate roots over a large prime use splitting") {
  auto R = make_ring(2147483647u, {"x"});
  auto f = P(R, "(x - 5)^3 * (x - 123456789) * (x^2 + 1) * (x + 1)");
  // -1 is a non-residue mod 2^31 - 1 since it is 3 mod 4
  CHECK(univariate_roots(f) == std::vector<Root>{{5, 3}, {123456789, 1}, {2147483646u, 1}});
}

TEST_CASE("univariate roots agree with scanning") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Coeff p = std::vector<Coeff>{2, 3, 5, 7, 11, 13}[trial % 6];
    auto R = make_ring(p, {"x"});
    auto f = Polynomial::constant(R, 1 + rng() % (p - 1));
    const int factors = 1 + rng() % 4;
    for (int k = 0; k < factors; ++k)
      f = f * (rng() % 3 ? P(R, "x") - Polynomial::constant(R, rng() % p) : testing::random_polynomial(rng, R, 2, 3));
    if (f.is_zero()) continue;
    CHECK(univariate_roots(f) == scan_roots(f));
  }
}

TEST_CASE("specialization") {
  auto R = make_ring(7, {"y", "x"});
  auto G = buchberger(testing::ideal_of(R, {"y^2 - x", "x^3 - 6"}), kLex);
  auto s = specialize_gb(G, 3);
  CHECK(s.generic);
  REQUIRE(s.basis.size() == 1);
  CHECK(s.basis[0] == P(R, "y^2 - 3"));

  auto U = make_ring(7, {"x"});
  CHECK(specialize_gb(buchberger(testing::ideal_of(U, {"x - 3"}), kLex), 3).basis.empty());
  auto unit = specialize_gb(buchberger(testing::ideal_of(U, {"x - 3"}), kLex), 4).basis;
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_constant());
}

TEST_CASE("specialized F5 ideal vanishes on the matching points") {
  auto R = make_ring(5, {"x3", "x2", "x1"});
  auto J = testing::ideal_of(R, {"x1^2 - x2", "x2^3 - x3", "x1^5 - x1", "x2^5 - x2", "x3^5 - x3"});
  auto s = specialize_gb(buchberger(J, kLex), 1);
  for (const auto& g : s.basis) CHECK(g.evaluate(VarietyPoint{1, 1, 1}) == 0);
  auto with_x1 = s.basis;
  with_x1.push_back(P(R, "x1 - 1"));
  CHECK(lex_solve(Ideal(R, with_x1)) == std::vector<VarietyPoint>{{1, 1, 1}});
}

TEST_CASE("specialization fallback always yields a Groebner basis") {
  std::mt19937_64 rng(22);
  int nongeneric = 0, total = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto R = make_ring(101, 3);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_polynomial(rng, R, 2, 4));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](auto& g) { return g.is_zero(); }), gens.end());
    if (gens.empty()) continue;
    auto G = buchberger(Ideal(R, gens), kLex);
    if (G.is_unit()) continue;
    const Coeff a = rng() % 101;
    auto s = specialize_gb(G, a);
    ++total;
    nongeneric += !s.generic;
    CHECK(is_groebner(s.basis, kLex));
    std::vector<Polynomial> subst;
    for (const auto& g : G.elements) {
      std::vector<Term> ts;
      for (const auto& t : g.terms()) {
        auto m = t.mono;
        const auto e = m[2];
        m.set(2, 0);
        ts.push_back({m, R->field.mul(t.coeff, R->field.pow(a, e))});
      }
      auto h = Polynomial::from_terms(R, ts, kLex);
      if (!h.is_zero()) subst.push_back(h);
    }
    if (subst.empty()) {
      CHECK(s.basis.empty());
      continue;
    }
    CHECK(s.basis == buchberger(Ideal(R, subst), kLex).elements);
  }
  CHECK(total > 20);
  MESSAGE("non-generic specializations: " << nongeneric << "/" << total);
}

TEST_CASE("lex_solve examples") {
  auto R = make_ring(5, {"x3", "x2", "x1"});
  auto J = testing::ideal_of(R, {"x1^2 - x2", "x2^3 - x3", "x1^5 - x1", "x2^5 - x2", "x3^5 - x3"});
  // coordinates in ring order (x3, x2, x1)
  CHECK(lex_solve(J) == std::vector<VarietyPoint>{{0, 0, 0}, {1, 1, 1}, {1, 1, 4}, {4, 4, 2}, {4, 4, 3}});
  CHECK_THROWS_AS(lex_solve(testing::ideal_of(R, {"x1^2 - x2", "x2^3 - x3"})), PreconditionError);

  auto U = make_ring(7, {"x"});
  CHECK(lex_solve(testing::ideal_of(U, {"x - 3"})) == std::vector<VarietyPoint>{{3}});
  CHECK(lex_solve(testing::ideal_of(U, {"x^2 + 1"})).empty());
  CHECK(lex_solve(testing::ideal_of(U, {"x^2 + 1", "x"})).empty());
}

TEST_CASE("lex_solve matches exhaustive search") {
  std::mt19937_64 rng(23);
  int nonempty = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Coeff p = std::vector<Coeff>{3, 5, 7, 11}[trial % 4];
    const std::size_t n = 1 + trial % 3;
    auto R = make_ring(p, n);
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < n; ++k) {
      auto g = testing::random_polynomial(rng, R, 2, 5);
      if (!g.is_zero()) gens.push_back(g);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto x = Polynomial::variable(R, i);
      gens.push_back(x.pow(p) - x);
    }
    Ideal I(R, gens);
    const auto sols = lex_solve(I);
    CHECK(sols == oracle::exhaustive_zeros(I));
    nonempty += !sols.empty();
  }
  CHECK(nonempty > 5);
}

TEST_CASE("unique_solve") {
  auto R = make_ring(7, {"x", "y"});
  CHECK(unique_solve(testing::ideal_of(R, {"x^2 - 4*x + 4", "y - x"})) == VarietyPoint{2, 2});
  CHECK(unique_solve(testing::ideal_of(R, {"x - 5", "y - 1"})) == VarietyPoint{5, 1});
  CHECK_THROWS_AS(unique_solve(testing::ideal_of(R, {"(x - 1)*(x - 2)", "y"})), PreconditionError);
  CHECK_THROWS_AS(unique_solve(testing::ideal_of(R, {"x^2 + 1", "y"})), PreconditionError);
}

TEST_CASE("shape interpolation") {
  auto R = make_ring(5, {"x1", "x2"});
  auto G = shape_interpolate(R, {{1, 2}, {3, 4}});
  REQUIRE(G.elements.size() == 2);
  CHECK(G.elements[0] == P(R, "x2^2 + 4*x2 + 3"));
  CHECK(G.elements[1] == P(R, "x1 - x2 + 1"));
  CHECK(is_groebner(G.elements, kLex));

  auto S = make_ring(7, {"a", "b", "c"});
  auto single = shape_interpolate(S, {{1, 2, 3}});
  CHECK(single.elements == std::vector<Polynomial>{P(S, "c - 3", kLex), P(S, "b - 2", kLex), P(S, "a - 1", kLex)});
  CHECK_THROWS_AS(shape_interpolate(R, {{1, 2}, {3, 2}}), PreconditionError);
}

TEST_CASE("shape interpolation round trip and vanishing-ideal check") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const Coeff p = std::vector<Coeff>{7, 11, 13, 101}[trial % 4];
    const std::size_t n = 1 + trial % 3;
    auto R = make_ring(p, n);
    std::vector<Coeff> lasts;
    for (Coeff v = 0; v < p; ++v) lasts.push_back(v);
    std::shuffle(lasts.begin(), lasts.end(), rng);
    const std::size_t count = 1 + rng() % std::min<Coeff>(p, 5);
    std::vector<VarietyPoint> pts;
    for (std::size_t k = 0; k < count; ++k) {
      VarietyPoint pt(n);
      for (std::size_t i = 0; i + 1 < n; ++i) pt[i] = rng() % p;
      pt[n - 1] = lasts[k];
      pts.push_back(pt);
    }
    auto G = shape_interpolate(R, pts);
    CHECK(is_groebner(G.elements, kLex));
    for (const auto& g : G.elements)
      for (const auto& pt : pts) CHECK(g.evaluate(pt) == 0);
    // a Groebner basis vanishing on the points with as many standard monomials
    // as points is the vanishing ideal; here the eliminant has degree #points
    CHECK(G.elements.front().degree() == static_cast<int>(count));
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    CHECK(lex_solve(Ideal(R, G.elements)) == sorted);
  }
}
