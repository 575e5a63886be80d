#pragma once

#include "solvdeg/minrank.hpp"
#include "solvdeg/polynomial.hpp"

namespace solvdeg {

/// Toy ABC instance over F_2[x1..x4]: the entries of AB and AC.
Ideal abc_fixture();
/// The matrices A, B, C of the toy instance.
PolyMatrix abc_matrix(char which);

/// (x1^2 - x2, x2^3 - x3) over F_5, variables ordered x3 > x2 > x1.
Ideal f5_fixture();
/// The F_5 fixture with the field equations appended.
Ideal f5_fixture_with_field_equations();
/// (x^2 - 1, xy + x) over F_7.
Ideal f7_fixture();

/// Appends x_i^p - x_i for every variable, then drops duplicate generators.
Ideal add_field_equations(const Ideal& I);

}  // namespace solvdeg
