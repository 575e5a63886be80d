#include "solvdeg/solver.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "solvdeg/errors.hpp"
#include "solvdeg/invariants.hpp"

namespace solvdeg {

namespace {

// Dense univariate polynomials, coefficients from degree 0 upward.
using Dense = std::vector<Coeff>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_mod(Dense a, const Dense& b, const PrimeField& F) {
  trim(a);
  const Coeff inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const Coeff c = F.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = F.sub(a[shift + k], F.mul(c, b[k]));
    trim(a);
  }
  return a;
}

Dense dense_mul(const Dense& a, const Dense& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  return out;
}

Dense dense_gcd(Dense a, Dense b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Coeff inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

/// base^e mod m.
Dense dense_powmod(Dense base, std::uint64_t e, const Dense& m, const PrimeField& F) {
  Dense result{1};
  base = dense_mod(base, m, F);
  while (e) {
    if (e & 1) result = dense_mod(dense_mul(result, base, F), m, F);
    base = dense_mod(dense_mul(base, base, F), m, F);
    e >>= 1;
  }
  return result;
}

Coeff dense_eval(const Dense& a, Coeff x, const PrimeField& F) {
  Coeff acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

/// Divides by (x - r), assuming r is a root.
Dense divide_linear(const Dense& a, Coeff r, const PrimeField& F) {
  Dense q(a.size() - 1, 0);
  Coeff carry = 0;
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    carry = F.add(a[k + 1], F.mul(carry, r));
    q[k] = carry;
  }
  return q;
}

/// Roots of a squarefree polynomial that splits into distinct linear factors.
void split_roots(const Dense& g, const PrimeField& F, std::mt19937_64& rng, std::vector<Coeff>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(F.neg(F.div(g[0], g[1])));
    return;
  }
  const std::uint32_t p = F.modulus();
  if (p == 2) {
    for (Coeff x = 0; x < 2; ++x)
      if (dense_eval(g, x, F) == 0) out.push_back(x);
    return;
  }
  while (true) {
    // gcd(g, (x + delta)^((p-1)/2) - 1) splits g with probability about 1/2
    const Dense shifted{static_cast<Coeff>(rng() % p), 1};
    Dense h = dense_powmod(shifted, (p - 1) / 2, g, F);
    if (h.empty()) h = {0};
    h[0] = F.sub(h[0], 1);
    Dense d = dense_gcd(g, h, F);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, F, rng, out);
      Dense rest = g;
      // exact division g / d
      Dense quotient(g.size() - d.size() + 1, 0);
      for (std::size_t k = quotient.size(); k-- > 0;) {
        quotient[k] = rest[k + d.size() - 1];
        for (std::size_t j = 0; j < d.size(); ++j) rest[k + j] = F.sub(rest[k + j], F.mul(quotient[k], d[j]));
      }
      split_roots(quotient, F, rng, out);
      return;
    }
  }
}

constexpr std::uint32_t kScanLimit = 1u << 20;

Polynomial substitute(const Polynomial& f, std::size_t var, Coeff a) {
  const PrimeField& F = f.field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    const Coeff c = F.mul(t.coeff, F.pow(a, m[var]));
    m.set(var, 0);
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms), f.order());
}

/// An element of G involving only `var`, nonconstant.
const Polynomial* eliminant(const std::vector<Polynomial>& G, std::size_t var) {
  for (const auto& g : G) {
    if (g.is_constant()) continue;
    if (univariate_variable(g) == var) return &g;
  }
  return nullptr;
}

GroebnerBasis lex_basis_zero_dim(const Ideal& I) {
  if (!is_zero_dimensional(I, false)) throw PreconditionError("ideal is not zero-dimensional");
  return buchberger(I, TermOrder::lex());
}

void solve_rec(const GroebnerBasis& G, std::size_t level, VarietyPoint& point, std::vector<VarietyPoint>& out) {
  if (G.is_unit()) return;
  if (level == 0) {
    if (!G.elements.empty()) throw InvariantViolation("nonzero basis after all substitutions");
    out.push_back(point);
    return;
  }
  const std::size_t var = level - 1;
  const Polynomial* g = eliminant(G.elements, var);
  if (!g) throw InvariantViolation("no eliminant in a certified LEX basis");
  for (const auto& root : univariate_roots(*g)) {
    point[var] = root.value;
    auto sp = specialize_gb(G, root.value, var);
    solve_rec(GroebnerBasis{std::move(sp.basis), TermOrder::lex(), true}, var, point, out);
  }
}

}  // namespace

std::optional<std::size_t> univariate_variable(const Polynomial& f) {
  std::optional<std::size_t> var;
  for (const auto& t : f.terms())
    for (std::size_t i : t.mono.support()) {
      if (var && *var != i) throw PreconditionError("polynomial is not univariate");
      var = i;
    }
  return var;
}

std::vector<Root> univariate_roots(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("roots of the zero polynomial");
  const auto var = univariate_variable(f);
  if (!var) return {};
  const PrimeField& F = f.field();
  const std::uint32_t p = F.modulus();
  Dense a(static_cast<std::size_t>(f.degree()) + 1, 0);
  for (const auto& t : f.terms()) a[t.mono[*var]] = t.coeff;

  // g = gcd(f, x^p - x) collects the distinct rational roots
  Dense xp = dense_powmod(Dense{0, 1}, p, a, F);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = F.sub(xp[1], 1);
  trim(xp);
  const Dense g = xp.empty() ? dense_gcd(a, Dense{}, F) : dense_gcd(a, xp, F);

  std::vector<Coeff> values;
  if (p <= kScanLimit) {
    for (Coeff x = 0; x < p && values.size() + 1 < g.size(); ++x)
      if (dense_eval(g, x, F) == 0) values.push_back(x);
  } else {
    std::mt19937_64 rng(p);
    split_roots(g, F, rng, values);
    std::sort(values.begin(), values.end());
  }

  std::vector<Root> roots;
  for (Coeff r : values) {
    unsigned mult = 0;
    Dense rest = a;
    while (rest.size() > 1 && dense_eval(rest, r, F) == 0) {
      rest = divide_linear(rest, r, F);
      ++mult;
    }
    roots.push_back({r, mult});
  }
  return roots;
}

Specialization specialize_gb(const GroebnerBasis& G, Coeff a, std::optional<std::size_t> var) {
  if (G.elements.empty()) return {};
  const auto& ring = G.elements.front().ring();
  const std::size_t v = var.value_or(ring->nvars() - 1);
  if (v >= ring->nvars()) throw DimensionError("specialized variable out of range");
  const TermOrder lex = TermOrder::lex();
  std::vector<Polynomial> subst;
  for (const auto& g : G.elements) {
    auto s = substitute(g.with_order(lex), v, ring->field.from_int(a));
    if (!s.is_zero()) subst.push_back(std::move(s));
  }
  Specialization out;
  if (subst.empty()) return out;
  out.generic = is_groebner(subst, lex);
  if (out.generic)
    out.basis = reduce_basis(std::move(subst), lex);
  else
    out.basis = buchberger(Ideal(ring, std::move(subst)), lex).elements;
  return out;
}

std::vector<VarietyPoint> lex_solve(const Ideal& I) {
  const auto G = lex_basis_zero_dim(I);
  std::vector<VarietyPoint> out;
  VarietyPoint point(I.nvars(), 0);
  solve_rec(G, I.nvars(), point, out);
  std::sort(out.begin(), out.end());
  return out;
}

VarietyPoint unique_solve(const Ideal& I) {
  GroebnerBasis G = lex_basis_zero_dim(I);
  VarietyPoint point(I.nvars(), 0);
  for (std::size_t var = I.nvars(); var-- > 0;) {
    if (G.is_unit()) throw PreconditionError("ideal has no solutions");
    const Polynomial* g = eliminant(G.elements, var);
    if (!g) throw InvariantViolation("no eliminant in a certified LEX basis");
    const auto roots = univariate_roots(*g);
    if (roots.size() != 1 || static_cast<int>(roots.front().multiplicity) != g->degree())
      throw PreconditionError("not a unique-solution ideal: eliminant is not a power of a linear form");
    point[var] = roots.front().value;
    G = GroebnerBasis{specialize_gb(G, point[var], var).basis, TermOrder::lex(), true};
  }
  if (!G.elements.empty()) throw InvariantViolation("nonzero basis after all substitutions");
  return point;
}

GroebnerBasis shape_interpolate(const RingPtr& ring, const std::vector<VarietyPoint>& points) {
  const std::size_t n = ring->nvars();
  const PrimeField& F = ring->field;
  const TermOrder lex = TermOrder::lex();
  if (n == 0) throw DimensionError("interpolation needs at least one variable");
  if (points.empty()) return GroebnerBasis{{Polynomial::constant(ring, 1, lex)}, lex, true};
  std::set<Coeff> last;
  for (const auto& pt : points) {
    if (pt.size() != n) throw DimensionError("point has the wrong number of coordinates");
    if (!last.insert(F.from_int(pt.back())).second)
      throw PreconditionError("points are not in normal position: repeated last coordinate");
  }
  const std::size_t v = n - 1;
  const auto xn = Polynomial::variable(ring, v, lex);
  auto linear = [&](Coeff a) { return xn - Polynomial::constant(ring, F.to_signed(F.from_int(a)), lex); };

  Polynomial gn = Polynomial::constant(ring, 1, lex);
  for (const auto& pt : points) gn = gn * linear(pt.back());

  // Lagrange basis in x_n
  std::vector<Polynomial> lagrange;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial L = Polynomial::constant(ring, 1, lex);
    Coeff denom = 1;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k == i) continue;
      L = L * linear(points[k].back());
      denom = F.mul(denom, F.sub(F.from_int(points[i].back()), F.from_int(points[k].back())));
    }
    lagrange.push_back(L.scaled(F.inv(denom)));
  }

  std::vector<Polynomial> basis{gn};
  for (std::size_t j = 0; j < v; ++j) {
    Polynomial gj(ring, lex);
    for (std::size_t i = 0; i < points.size(); ++i) gj = gj + lagrange[i].scaled(F.from_int(points[i][j]));
    basis.push_back(Polynomial::variable(ring, j, lex) - gj);
  }
  return GroebnerBasis{reduce_basis(std::move(basis), lex), lex, true};
}

}  // namespace solvdeg
