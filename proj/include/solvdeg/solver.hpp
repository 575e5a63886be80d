#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "solvdeg/groebner.hpp"

namespace solvdeg {

/// Coordinates in ring-variable order.
using VarietyPoint = std::vector<Coeff>;

struct Root {
  Coeff value;
  unsigned multiplicity;
  bool operator==(const Root&) const = default;
};

/// The univariate variable of f, or nullopt when f is constant.
/// Throws PreconditionError when f involves two or more variables.
std::optional<std::size_t> univariate_variable(const Polynomial& f);

/// F_p-rational roots of a univariate polynomial, ascending, with multiplicity.
std::vector<Root> univariate_roots(const Polynomial& f);

struct Specialization {
  std::vector<Polynomial> basis;  // reduced LEX basis of the specialized ideal
  bool generic = true;            // the substituted set already was a Groebner basis
};

/// Substitutes x_var := a in a LEX Groebner basis. The substituted set is
/// certified with is_groebner and recomputed when it fails. `var` defaults to
/// the smallest variable.
Specialization specialize_gb(const GroebnerBasis& G, Coeff a, std::optional<std::size_t> var = std::nullopt);

/// All F_p-rational points of a zero-dimensional ideal, by recursive
/// specialization of its LEX basis. Sorted lexicographically.
std::vector<VarietyPoint> lex_solve(const Ideal& I);

/// The single solution of an ideal whose eliminants are powers of linear forms.
VarietyPoint unique_solve(const Ideal& I);

/// Shape-lemma basis of the vanishing ideal of points with pairwise distinct
/// last coordinates.
GroebnerBasis shape_interpolate(const RingPtr& ring, const std::vector<VarietyPoint>& points);

}  // namespace solvdeg
