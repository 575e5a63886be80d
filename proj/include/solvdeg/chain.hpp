#pragma once

#include <string>
#include <vector>

#include "solvdeg/invariants.hpp"
#include "solvdeg/macaulay.hpp"

namespace solvdeg {

struct ChainValues {
  int maxgb_tilde = 0;
  int solvdeg_tilde = 0;
  int solvdeg = 0;
  int maxgb = 0;
  int maxgb_h = 0;
  int solvdeg_h = 0;
};

struct ChainRelation {
  std::string name;
  bool licensed = true;  // the hypotheses needed for the relation hold
  bool holds = true;
};

struct ChainReport {
  ChainValues values;
  bool tilde_zero_dimensional = false;
  RegularityReport reg_tilde;
  int macaulay_bound = 0;    // d_1 + ... + d_r - r + 1
  int macaulay_bound_d = 0;  // (n + 1)(d - 1) + 1
  std::vector<ChainRelation> relations;

  /// Every licensed relation holds.
  bool passed() const;
};

int macaulay_bound(const Ideal& I);
int macaulay_bound_max_degree(const Ideal& I);
/// The same bounds from a degree profile alone.
int macaulay_bound(const std::vector<int>& degrees);
int macaulay_bound_max_degree(std::size_t n, int d);

/// maxGB(I~) = solvdeg(I~) >= solvdeg(I) >= maxGB(I) = maxGB(I^h) = solvdeg(I^h),
/// plus solvdeg(I) <= reg(I~) and the Macaulay bounds when I~ is zero-dimensional.
ChainReport verify_chain(const Ideal& I, XlOptions options = {}, bool assert_generic_coordinates = false);

}  // namespace solvdeg
