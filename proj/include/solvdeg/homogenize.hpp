#pragma once

#include "solvdeg/polynomial.hpp"

namespace solvdeg {

/// Source ring R and target S = R[t], with t appended as the last variable.
class Homogenization {
 public:
  explicit Homogenization(RingPtr source);

  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  std::size_t t_index() const { return source_->nvars(); }

  Polynomial homogenize(const Polynomial& f) const;
  /// Sets t = 1.
  Polynomial dehomogenize(const Polynomial& F) const;

  /// (f_1^h, ..., f_r^h), generator order preserved.
  Ideal tilde(const Ideal& I) const;
  /// Homogenization of the reduced DRL Groebner basis of I; a DRL_T_LAST
  /// Groebner basis of I^h.
  Ideal homogenized(const Ideal& I) const;
  Ideal dehomogenize(const Ideal& J) const;

 private:
  RingPtr source_;
  RingPtr target_;
};

/// Name for the homogenizing variable: "t", primed until it is unused.
std::string fresh_t_name(const Ring& ring);

Polynomial top_part(const Polynomial& f);
Ideal top_ideal(const Ideal& I);

}  // namespace solvdeg
