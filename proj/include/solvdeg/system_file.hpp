#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "solvdeg/polynomial.hpp"

namespace solvdeg {

/// Line-oriented input:
///   field <p>
///   vars <name> <name> ...
///   <polynomial>              one generator per line
///   row <poly>, <poly>, ...   one matrix row per line
///   point <a> <b> ...         one point per line
/// '#' starts a comment.
struct SystemFile {
  RingPtr ring;
  std::vector<Polynomial> polynomials;
  std::vector<std::vector<Polynomial>> matrix;
  std::vector<std::vector<Coeff>> points;

  Ideal ideal() const { return Ideal(ring, polynomials); }
};

SystemFile parse_system_file(std::string_view text);
/// Requires at least one generator.
Ideal parse_system(std::string_view text);
Polynomial parse_polynomial(std::string_view expr, const RingPtr& ring, int line = 1);

std::string print_system(const Ideal& I);

}  // namespace solvdeg
