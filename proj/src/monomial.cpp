#include "solvdeg/monomial.hpp"

#include <algorithm>
#include <limits>

#include "solvdeg/errors.hpp"

namespace solvdeg {

namespace {

void check_nvars(std::size_t n) {
  if (n > Monomial::kMaxVars)
    throw DimensionError("at most " + std::to_string(Monomial::kMaxVars) + " variables are supported");
}

void check_same(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DimensionError("monomials have different numbers of variables");
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw DimensionError("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw DimensionError("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

std::vector<unsigned> Monomial::exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

bool Monomial::divides(const Monomial& other) const noexcept {
  if (nvars_ != other.nvars_ || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

Monomial Monomial::quotient(const Monomial& other) const {
  check_same(*this, other);
  if (!other.divides(*this)) throw PreconditionError("monomial quotient is not exact");
  Monomial q(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) q.exps_[i] = exps_[i] - other.exps_[i];
  q.degree_ = degree_ - other.degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same(*this, other);
  Monomial l(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) l.set(i, std::max(exps_[i], other.exps_[i]));
  return l;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same(*this, other);
  Monomial g(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) g.set(i, std::min(exps_[i], other.exps_[i]));
  return g;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < std::min<std::size_t>(nvars_, other.nvars_); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::truncated(std::size_t nvars) const {
  Monomial m(nvars);
  for (std::size_t i = 0; i < std::min<std::size_t>(nvars, nvars_); ++i) m.set(i, exps_[i]);
  return m;
}

Monomial Monomial::extended(std::size_t nvars, unsigned last_exponent) const {
  if (nvars <= nvars_) throw DimensionError("extension must add variables");
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars_; ++i) m.set(i, exps_[i]);
  m.set(nvars - 1, last_exponent);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    const unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw DimensionError("exponent overflow");
    m.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = (h ^ exps_[i]) * 1099511628211ull;
  return h;
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, unsigned remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur.set(pos, remaining);
    out.push_back(cur);
    cur.set(pos, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(pos, e);
    enumerate(nvars, pos + 1, remaining - e, cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  enumerate(nvars, 0, d, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned e = 0; e <= d; ++e) {
    auto part = monomials_of_degree(nvars, e);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace solvdeg
