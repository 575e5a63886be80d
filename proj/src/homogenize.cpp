#include "solvdeg/homogenize.hpp"

#include "solvdeg/errors.hpp"
#include "solvdeg/groebner.hpp"

namespace solvdeg {

std::string fresh_t_name(const Ring& ring) {
  std::string t = "t";
  while (ring.index_of(t)) t += '_';
  return t;
}

Homogenization::Homogenization(RingPtr source) : source_(std::move(source)) {
  auto vars = source_->vars;
  vars.push_back(fresh_t_name(*source_));
  target_ = make_ring(source_->field.modulus(), std::move(vars));
}

Polynomial Homogenization::homogenize(const Polynomial& f) const {
  require_same_ring(f.ring(), source_);
  if (f.is_zero()) throw ZeroPolynomialError("cannot homogenize the zero polynomial");
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono.extended(target_->nvars(), d - t.mono.degree()), t.coeff});
  const TermOrder ord = f.order() == TermOrder::drl() ? TermOrder::drl_t_last() : f.order();
  return Polynomial::from_terms(target_, std::move(terms), ord);
}

Polynomial Homogenization::dehomogenize(const Polynomial& F) const {
  require_same_ring(F.ring(), target_);
  std::vector<Term> terms;
  terms.reserve(F.size());
  for (const auto& t : F.terms()) terms.push_back({t.mono.truncated(source_->nvars()), t.coeff});
  TermOrder ord = F.order();
  if (ord.kind() == TermOrder::Kind::DrlTLast) ord = TermOrder::drl();
  if (ord.kind() == TermOrder::Kind::BarSigma) ord = ord.inner();
  return Polynomial::from_terms(source_, std::move(terms), ord);
}

Ideal Homogenization::tilde(const Ideal& I) const {
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(homogenize(f));
  return Ideal(target_, std::move(gens));
}

Ideal Homogenization::homogenized(const Ideal& I) const {
  std::vector<Polynomial> gens;
  const auto G = buchberger(I, TermOrder::drl());
  for (const auto& g : G.elements) gens.push_back(homogenize(g).with_order(TermOrder::drl_t_last()));
  return Ideal(target_, std::move(gens));
}

Ideal Homogenization::dehomogenize(const Ideal& J) const {
  std::vector<Polynomial> gens;
  for (const auto& F : J.gens()) {
    auto f = dehomogenize(F);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return Ideal(source_, std::move(gens));
}

Polynomial top_part(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("the zero polynomial has no top part");
  return f.homogeneous_part(static_cast<unsigned>(f.degree()));
}

Ideal top_ideal(const Ideal& I) {
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(top_part(f));
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace solvdeg
