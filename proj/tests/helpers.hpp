#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "solvdeg/errors.hpp"
#include "solvdeg/polynomial.hpp"
#include "solvdeg/system_file.hpp"

namespace doctest {
template <>
struct StringMaker<solvdeg::Polynomial> {
  static String convert(const solvdeg::Polynomial& f) { return f.to_string().c_str(); }
};
}  // namespace doctest

namespace testing {

using namespace solvdeg;

inline Polynomial P(const RingPtr& ring, const std::string& s, TermOrder ord = TermOrder::drl()) {
  return parse_polynomial(s, ring).with_order(ord);
}

inline Ideal ideal_of(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(ring, g));
  return Ideal(ring, std::move(v));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<unsigned>(rng() % (max_exp + 1)));
  return m;
}

/// Sparse random polynomial with at most `terms` terms of degree <= deg.
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned deg, std::size_t terms,
                                    TermOrder ord = TermOrder::drl()) {
  const auto mons = monomials_up_to_degree(ring->nvars(), deg);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k)
    ts.push_back({mons[rng() % mons.size()], static_cast<Coeff>(rng() % ring->field.modulus())});
  return Polynomial::from_terms(ring, std::move(ts), ord);
}

}  // namespace testing
