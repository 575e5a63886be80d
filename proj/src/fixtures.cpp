#include "solvdeg/fixtures.hpp"

#include <algorithm>

#include "solvdeg/errors.hpp"
#include "solvdeg/system_file.hpp"

namespace solvdeg {

namespace {

RingPtr abc_ring() {
  static const RingPtr ring = make_ring(2, {"x1", "x2", "x3", "x4"});
  return ring;
}

PolyMatrix matrix2(const RingPtr& ring, const char* a, const char* b, const char* c, const char* d) {
  PolyMatrix M(ring, 2, 2);
  M.at(0, 0) = parse_polynomial(a, ring);
  M.at(0, 1) = parse_polynomial(b, ring);
  M.at(1, 0) = parse_polynomial(c, ring);
  M.at(1, 1) = parse_polynomial(d, ring);
  return M;
}

}  // namespace

PolyMatrix abc_matrix(char which) {
  const auto R = abc_ring();
  switch (which) {
    case 'A': return matrix2(R, "x1", "x2", "x3", "x4");
    case 'B': return matrix2(R, "x1 + x2 + x3 + x4", "x1 + x2 + x4", "x3", "x1 + x2 + x4");
    case 'C': return matrix2(R, "x4", "x3 + x4", "x1 + x4", "0");
  }
  throw PreconditionError(std::string("no ABC matrix named ") + which);
}

Ideal abc_fixture() {
  const auto A = abc_matrix('A');
  const auto AB = A * abc_matrix('B');
  const auto AC = A * abc_matrix('C');
  std::vector<Polynomial> gens;
  for (const auto* M : {&AB, &AC})
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) gens.push_back(M->at(i, j));
  return Ideal(abc_ring(), std::move(gens));
}

Ideal f5_fixture() { return parse_system("field 5\nvars x3 x2 x1\nx1^2 - x2\nx2^3 - x3\n"); }

Ideal f5_fixture_with_field_equations() { return add_field_equations(f5_fixture()); }

Ideal f7_fixture() { return parse_system("field 7\nvars x y\nx^2 - 1\nx*y + x\n"); }

Ideal add_field_equations(const Ideal& I) {
  const auto& ring = I.ring();
  std::vector<Polynomial> gens = I.gens();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const auto x = Polynomial::variable(ring, i);
    gens.push_back(x.pow(ring->field.modulus()) - x);
  }
  std::vector<Polynomial> unique;
  for (auto& g : gens) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const Polynomial& u) {
      return u.monic() == g.monic();
    });
    if (!seen) unique.push_back(std::move(g));
  }
  return Ideal(ring, std::move(unique));
}

}  // namespace solvdeg
