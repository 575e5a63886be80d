#pragma once

#include <span>
#include <vector>

#include "solvdeg/polynomial.hpp"

namespace solvdeg {

struct GroebnerBasis {
  std::vector<Polynomial> elements;
  TermOrder order;
  bool reduced = false;

  /// Largest degree of an element; -1 when empty.
  int max_degree() const;
  bool is_unit() const;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder order);

/// Reduced Groebner basis by Buchberger's algorithm with the normal pair
/// selection strategy and both of Buchberger's criteria. Elements are monic
/// and sorted by increasing leading monomial.
GroebnerBasis buchberger(const Ideal& I, TermOrder order);

/// True iff every S-polynomial reduces to zero modulo G.
bool is_groebner(std::span<const Polynomial> G, TermOrder order);

/// Turns a Groebner basis into the reduced one: drops redundant leading
/// terms, reduces tails, makes monic, sorts ascending.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, TermOrder order);

/// Largest degree in the reduced basis of I under `order`.
int max_gb_degree(const Ideal& I, TermOrder order);

/// f in I, decided by reduction against a Groebner basis of I.
bool ideal_contains(const GroebnerBasis& G, const Polynomial& f);
/// Two generating sets generate the same ideal.
bool same_ideal(const Ideal& a, const Ideal& b);

}  // namespace solvdeg
