#include "solvdeg/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "solvdeg/errors.hpp"

namespace solvdeg {

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
  if (vars.size() > Monomial::kMaxVars) throw DimensionError("too many variables");
  return std::make_shared<const Ring>(Ring{PrimeField(p), std::move(vars)});
}

RingPtr make_ring(std::uint32_t p, std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(p, std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw DimensionError("polynomials live in different rings");
}

Polynomial::Polynomial(RingPtr ring, TermOrder order) : ring_(std::move(ring)), order_(order) {
  if (!ring_) throw PreconditionError("polynomial needs a ring");
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c, TermOrder order) {
  Polynomial f(ring, order);
  const Coeff v = f.field().from_int(c);
  if (v != 0) f.terms_.push_back({Monomial(ring->nvars()), v});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, TermOrder order) {
  const auto n = ring->nvars();
  return term(std::move(ring), Monomial::variable(n, index), 1, order);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Coeff c, TermOrder order) {
  Polynomial f(ring, order);
  if (m.size() != ring->nvars()) throw DimensionError("monomial length does not match the ring");
  c %= ring->field.modulus();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, TermOrder order) {
  Polynomial f(ring, order);
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw DimensionError("monomial length does not match the ring");
    t.coeff %= ring->field.modulus();
  }
  f.terms_ = std::move(terms);
  f.sort_and_combine();
  return f;
}

void Polynomial::sort_and_combine() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = field().add(out.back().coeff, t.coeff);
    else
      out.push_back(t);
    if (out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw ZeroPolynomialError("the zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::with_order(TermOrder order) const {
  if (order == order_) return *this;
  Polynomial f(ring_, order);
  f.terms_ = terms_;
  std::sort(f.terms_.begin(), f.terms_.end(),
            [order](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return f;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lc()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial f(ring_, order_);
  c %= field().modulus();
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.mono, field().mul(t.coeff, c)});
  return f;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  Polynomial f(ring_, order_);
  c %= field().modulus();
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return f;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial f(ring_, order_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) f.terms_.push_back(t);
  return f;
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (point.size() != nvars()) throw DimensionError("point has the wrong number of coordinates");
  const auto& F = field();
  Coeff sum = 0;
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i] > 0) v = F.mul(v, F.pow(point[i] % F.modulus(), t.mono[i]));
    sum = F.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::operator-() const { return scaled(field().modulus() - 1); }

void Polynomial::sub_scaled_inplace(Coeff c, const Monomial& m, const Polynomial& g) {
  require_same_ring(ring_, g.ring_);
  const Polynomial& h = g.order_ == order_ ? g : g.with_order(order_);
  const auto& F = field();
  const Coeff negc = F.neg(c % F.modulus());
  if (negc == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + h.terms_.size());
  auto a = terms_.begin();
  auto b = h.terms_.begin();
  while (a != terms_.end() || b != h.terms_.end()) {
    if (b == h.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    const Monomial mb = b->mono * m;
    if (a == terms_.end()) {
      out.push_back({mb, F.mul(b->coeff, negc)});
      ++b;
      continue;
    }
    const auto cmp = order_.compare(a->mono, mb);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({mb, F.mul(b->coeff, negc)});
      ++b;
    } else {
      const Coeff v = F.add(a->coeff, F.mul(b->coeff, negc));
      if (v != 0) out.push_back({mb, v});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.sub_scaled_inplace(a.field().modulus() - 1, Monomial(a.nvars()), b);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.sub_scaled_inplace(1, Monomial(a.nvars()), b);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  std::unordered_map<Monomial, Coeff> acc;
  const auto& F = a.field();
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& slot = acc[s.mono * t.mono];
      slot = F.add(slot, F.mul(s.coeff, t.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  Polynomial r(a.ring_, a.order_);
  r.terms_ = std::move(terms);
  r.sort_and_combine();
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1, order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.vars[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const Polynomial f = with_order(TermOrder::drl());
  std::string s;
  for (const auto& t : f.terms_) {
    const std::int64_t c = field().to_signed(t.coeff);
    const std::int64_t mag = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (t.mono.is_one())
      s += std::to_string(mag);
    else if (mag == 1)
      s += monomial_to_string(t.mono, *ring_);
    else
      s += std::to_string(mag) + "*" + monomial_to_string(t.mono, *ring_);
  }
  return s;
}

Term leading_term(const Polynomial& f, TermOrder order) {
  if (f.is_zero()) throw ZeroPolynomialError("the zero polynomial has no leading term");
  if (f.order() == order) return f.leading();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, TermOrder order) {
  std::vector<Polynomial> divisors;
  divisors.reserve(G.size());
  for (const auto& g : G) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw ZeroPolynomialError("cannot divide by the zero polynomial");
    divisors.push_back(g.with_order(order));
  }
  Polynomial p = f.with_order(order);
  std::vector<Term> rem;
  const auto& F = f.field();
  // p keeps only the not-yet-examined tail; terms that no divisor reduces move to rem.
  while (!p.is_zero()) {
    const Term lt = p.leading();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors)
      if (g.lm().divides(lt.mono)) {
        hit = &g;
        break;
      }
    if (hit) {
      p.sub_scaled_inplace(F.div(lt.coeff, hit->lc()), lt.mono.quotient(hit->lm()), *hit);
    } else {
      rem.push_back(lt);
      p.sub_scaled_inplace(1, Monomial(f.nvars()), Polynomial::term(f.ring(), lt.mono, lt.coeff, order));
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rem), order);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (!ring_) throw PreconditionError("ideal needs a ring");
  for (const auto& g : gens_) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) throw ZeroPolynomialError("ideal generators must be nonzero");
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

int Ideal::min_degree() const {
  if (gens_.empty()) return -1;
  int d = gens_.front().degree();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return d;
}

Ideal Ideal::canonicalized() const {
  std::vector<Polynomial> out;
  for (const auto& g : gens_)
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return Ideal(ring_, std::move(out));
}

Ideal Ideal::with_order(TermOrder order) const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.with_order(order));
  return Ideal(ring_, std::move(out));
}

}  // namespace solvdeg
