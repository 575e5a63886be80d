#include "solvdeg/chain.hpp"

#include <algorithm>

#include "solvdeg/errors.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/homogenize.hpp"

namespace solvdeg {

bool ChainReport::passed() const {
  return std::all_of(relations.begin(), relations.end(), [](const ChainRelation& r) { return !r.licensed || r.holds; });
}

int macaulay_bound(const std::vector<int>& degrees) {
  int sum = 0;
  for (int d : degrees) sum += d;
  return sum - static_cast<int>(degrees.size()) + 1;
}

int macaulay_bound_max_degree(std::size_t n, int d) { return static_cast<int>(n + 1) * (d - 1) + 1; }

int macaulay_bound(const Ideal& I) {
  std::vector<int> degrees;
  for (const auto& f : I.gens()) degrees.push_back(f.degree());
  return macaulay_bound(degrees);
}

int macaulay_bound_max_degree(const Ideal& I) { return macaulay_bound_max_degree(I.nvars(), I.max_degree()); }

ChainReport verify_chain(const Ideal& I, XlOptions options, bool assert_generic_coordinates) {
  if (I.is_homogeneous()) throw PreconditionError("verify-chain needs an inhomogeneous ideal");
  const Homogenization H(I.ring());
  const Ideal tilde = H.tilde(I);
  const Ideal Ih = H.homogenized(I);
  const TermOrder drl = TermOrder::drl();
  const TermOrder drl_t = TermOrder::drl_t_last();

  ChainReport rep;
  auto& v = rep.values;
  v.solvdeg = solving_degree(I, drl, options);
  v.solvdeg_tilde = solving_degree(tilde, drl_t, options);
  v.solvdeg_h = solving_degree(Ih, drl_t, options);
  v.maxgb = max_gb_degree(I, drl);
  v.maxgb_tilde = max_gb_degree(tilde, drl_t);
  v.maxgb_h = max_gb_degree(Ih, drl_t);

  rep.tilde_zero_dimensional = is_zero_dimensional(tilde, true);
  rep.reg_tilde = reg_via_initial(tilde, assert_generic_coordinates);
  rep.macaulay_bound = macaulay_bound(I);
  rep.macaulay_bound_d = macaulay_bound_max_degree(I);

  auto& rel = rep.relations;
  rel.push_back({"maxGB(I~) = solvdeg(I~)", true, v.maxgb_tilde == v.solvdeg_tilde});
  rel.push_back({"solvdeg(I~) >= solvdeg(I)", true, v.solvdeg_tilde >= v.solvdeg});
  rel.push_back({"solvdeg(I) >= maxGB(I)", true, v.solvdeg >= v.maxgb});
  rel.push_back({"maxGB(I) = maxGB(I^h)", true, v.maxgb == v.maxgb_h});
  rel.push_back({"maxGB(I^h) = solvdeg(I^h)", true, v.maxgb_h == v.solvdeg_h});
  rel.push_back({"solvdeg(I) <= reg(I~)", rep.reg_tilde.exact, v.solvdeg <= rep.reg_tilde.value});
  rel.push_back({"solvdeg(I) <= sum(d_i) - r + 1", rep.tilde_zero_dimensional, v.solvdeg <= rep.macaulay_bound});
  rel.push_back({"solvdeg(I) <= (n+1)(d-1) + 1", rep.tilde_zero_dimensional, v.solvdeg <= rep.macaulay_bound_d});
  return rep;
}

}  // namespace solvdeg
