#pragma once

#include <string>
#include <vector>

#include "solvdeg/polynomial.hpp"
#include "solvdeg/system_file.hpp"

namespace testing {

/// Reduced LEX basis of the toy ABC ideal.
inline std::vector<solvdeg::Polynomial> abc_reference_basis(const solvdeg::RingPtr& ring) {
  const char* polys[] = {"x4^3",
                         "x3*x4^2",
                         "x3^2 + x3*x4",
                         "x2*x4 + x3*x4",
                         "x2*x3 + x4^2",
                         "x2^2 + x4^2",
                         "x1*x4 + x3*x4 + x4^2",
                         "x1*x3 + x3*x4 + x4^2",
                         "x1*x2 + x4^2",
                         "x1^2"};
  std::vector<solvdeg::Polynomial> out;
  for (const char* p : polys) out.push_back(solvdeg::parse_polynomial(p, ring).with_order(solvdeg::TermOrder::lex()));
  return out;
}

/// The five F_5 points, in (x1, x2, x3) order.
inline std::vector<std::vector<solvdeg::Coeff>> f5_reference_points() {
  return {{0, 0, 0}, {1, 1, 1}, {2, 4, 4}, {3, 4, 4}, {4, 1, 1}};
}

}  // namespace testing
