#include "solvdeg/groebner.hpp"

#include <algorithm>
#include <set>

#include "solvdeg/errors.hpp"

namespace solvdeg {

int GroebnerBasis::max_degree() const {
  int d = -1;
  for (const auto& g : elements) d = std::max(d, g.degree());
  return d;
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder order) {
  const Polynomial a = f.with_order(order);
  const Polynomial b = g.with_order(order);
  const Monomial l = a.lm().lcm(b.lm());
  const auto& F = a.field();
  Polynomial s = a.mul_term(l.quotient(a.lm()), F.inv(a.lc()));
  s.sub_scaled_inplace(F.inv(b.lc()), l.quotient(b.lm()), b);
  return s;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, TermOrder order) {
  std::vector<Polynomial> work;
  for (auto& g : G)
    if (!g.is_zero()) work.push_back(g.with_order(order).monic());
  // Minimalize: keep an element only if no other (earlier, for equal LTs) LT divides its LT.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < work.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < work.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = work[j].lm();
      const auto& b = work[i].lm();
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(work[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term lt = minimal[i].leading();
    Polynomial tail = minimal[i];
    tail.sub_scaled_inplace(1, Monomial(tail.nvars()), Polynomial::term(tail.ring(), lt.mono, lt.coeff, order));
    Polynomial r = others.empty() ? tail : normal_form(tail, others, order);
    r += Polynomial::term(tail.ring(), lt.mono, lt.coeff, order);
    minimal[i] = r.monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [order](const Polynomial& a, const Polynomial& b) { return order.less(a.lm(), b.lm()); });
  return minimal;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& I, TermOrder order) {
  GroebnerBasis out{{}, order, true};
  std::vector<Polynomial> G;
  for (const auto& g : I.gens()) {
    Polynomial h = g.with_order(order).monic();
    if (h.is_constant()) {
      out.elements = {Polynomial::constant(I.ring(), 1, order)};
      return out;
    }
    G.push_back(std::move(h));
  }
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) pending.push_back({i, k, G[i].lm().lcm(G[k].lm())});
  };
  for (std::size_t k = 1; k < G.size(); ++k) add_pairs(k);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pr = *best;
    pending.erase(best);
    done.insert({pr.i, pr.j});
    if (G[pr.i].lm().coprime(G[pr.j].lm())) continue;
    // Chain criterion: some g_k with LT dividing the lcm whose pairs with i and j are both treated.
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !G[k].lm().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      chain = done.count(key(pr.i, k)) && done.count(key(pr.j, k));
    }
    if (chain) continue;
    Polynomial h = normal_form(s_polynomial(G[pr.i], G[pr.j], order), G, order);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) {
      out.elements = {Polynomial::constant(I.ring(), 1, order)};
      return out;
    }
    G.push_back(std::move(h));
    add_pairs(G.size() - 1);
  }
  out.elements = reduce_basis(std::move(G), order);
  return out;
}

bool is_groebner(std::span<const Polynomial> G, TermOrder order) {
  std::vector<Polynomial> basis;
  for (const auto& g : G) {
    if (g.is_zero()) throw ZeroPolynomialError("Groebner basis candidates must be nonzero");
    basis.push_back(g.with_order(order));
  }
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].lm().coprime(basis[j].lm())) continue;
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  return true;
}

int max_gb_degree(const Ideal& I, TermOrder order) {
  if (I.size() == 0) throw PreconditionError("maxGB of the zero ideal is undefined");
  return buchberger(I, order).max_degree();
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
  if (f.is_zero()) return true;
  return normal_form(f, G.elements, G.order).is_zero();
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  const auto ga = buchberger(a, TermOrder::drl());
  const auto gb = buchberger(b, TermOrder::drl());
  return ga.elements == gb.elements;
}

}  // namespace solvdeg
