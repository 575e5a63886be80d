#pragma once

#include <map>
#include <string>
#include <vector>

#include "solvdeg/polynomial.hpp"

namespace solvdeg {

/// Monomial ideal kept by its minimal generators, sorted by DRL.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;
  Monomial lcm() const;
  int max_generator_degree() const;

  MonomialIdeal plus(const Monomial& m) const;
  MonomialIdeal quotient(const Monomial& m) const;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Leading-term ideal of I via its reduced Groebner basis.
MonomialIdeal initial_ideal(const Ideal& I, TermOrder order = TermOrder::drl());

/// Largest |S| such that no generator is supported inside S; -1 for the unit ideal.
int monomial_krull_dim(const MonomialIdeal& I);

/// Affine: R/in_DRL(I) has dimension 0. Projective (homogeneous I only):
/// dimension at most 1, i.e. finitely many projective zeros.
bool is_zero_dimensional(const Ideal& I, bool projective);

/// h(z) / (1 - z)^ell with h(1) != 0. The unit ideal has h empty.
struct HilbertSeries {
  std::vector<long long> h;
  int ell = 0;

  int h_degree() const { return static_cast<int>(h.size()) - 1; }
  /// Degree from which the Hilbert function agrees with the Hilbert polynomial.
  int ireg() const;
  std::vector<long long> hilbert_function(unsigned up_to) const;
};

HilbertSeries hilbert_series(const MonomialIdeal& I);
/// Hilbert series of R/I for homogeneous I, computed from in_DRL(I).
HilbertSeries hilbert_series(const Ideal& I);
int index_of_regularity(const Ideal& I);

class BettiTable {
 public:
  long long operator()(int i, int j) const;
  void add(int i, int j, long long v);
  const std::map<std::pair<int, int>, long long>& entries() const noexcept { return entries_; }
  int pd() const;
  int reg() const;
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// Graded Betti numbers of I as a module, from the multigraded Koszul
/// homology of R/I over F_p in each multidegree dividing the lcm of the
/// generators.
BettiTable betti_table(const MonomialIdeal& I, std::uint32_t p = 32003);
int cm_regularity(const MonomialIdeal& I);

struct RegularityReport {
  int value = 0;
  bool zero_dimensional = false;
  bool generic_coordinates_asserted = false;
  bool exact = false;
  std::string label() const { return exact ? "exact" : "upper-bound heuristic"; }
};

/// reg(in_DRL(I)) for homogeneous I. It equals reg(I) when I is
/// zero-dimensional or in generic coordinates; the latter is only asserted
/// by the caller, never checked.
RegularityReport reg_via_initial(const Ideal& I, bool assert_generic_coordinates = false);

/// ireg(I^top); requires R/I^top to be Artinian.
int dreg_faugere(const Ideal& I);

}  // namespace solvdeg
