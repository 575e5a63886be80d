#include "solvdeg/json_io.hpp"

namespace solvdeg {

Json to_json(const SolveReport& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace)
    trace.push_back({{"d", s.d}, {"rows", s.rows}, {"cols", s.cols}, {"rank", s.rank}, {"mutants", s.mutants}});
  return {{"solving_degree", r.solving_degree}, {"trace", trace}, {"order", r.order.name()}, {"mutants", r.mutants}};
}

Json to_json(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

Json to_json(const GroebnerBasis& G) {
  return {{"order", G.order.name()}, {"max_degree", G.max_degree()}, {"basis", to_json(G.elements)}};
}

Json to_json(const HilbertSeries& h) {
  return {{"h", h.h}, {"ell", h.ell}, {"ireg", h.ireg()}};
}

Json to_json(const BettiTable& b) {
  Json entries = Json::array();
  for (const auto& [ij, v] : b.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
  Json out{{"betti", entries}};
  if (!b.empty()) {
    out["pd"] = b.pd();
    out["reg"] = b.reg();
  }
  return out;
}

Json to_json(const RegularityReport& r) {
  return {{"reg", r.value},
          {"label", r.label()},
          {"zero_dimensional", r.zero_dimensional},
          {"generic_coordinates_asserted", r.generic_coordinates_asserted}};
}

Json to_json(const FirstFallReport& r) {
  Json dims = Json::array();
  for (const auto& d : r.dims) dims.push_back({d.e, d.syz, d.triv});
  Json out;
  out["first_fall_degree"] = r.first_fall_degree ? Json(*r.first_fall_degree) : Json(nullptr);
  out["dims"] = dims;
  return out;
}

Json to_json(const MinRankReport& r) {
  Json out{{"r", r.r}, {"s", r.s}, {"t", r.t}};
  out["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  out["solvdeg"] = r.solvdeg;
  out["height_ok"] = r.height_ok;
  out["height"] = r.height;
  out["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  return out;
}

Json to_json(const ChainReport& r) {
  const auto& v = r.values;
  Json rel = Json::array();
  for (const auto& x : r.relations) rel.push_back({{"relation", x.name}, {"licensed", x.licensed}, {"holds", x.holds}});
  return {{"chain",
           {{"maxGB_tilde", v.maxgb_tilde},
            {"solvdeg_tilde", v.solvdeg_tilde},
            {"solvdeg", v.solvdeg},
            {"maxGB", v.maxgb},
            {"maxGB_h", v.maxgb_h},
            {"solvdeg_h", v.solvdeg_h}}},
          {"tilde_zero_dimensional", r.tilde_zero_dimensional},
          {"reg_tilde", to_json(r.reg_tilde)},
          {"macaulay_bound", r.macaulay_bound},
          {"macaulay_bound_max_degree", r.macaulay_bound_d},
          {"relations", rel},
          {"passed", r.passed()}};
}

Json points_to_json(const std::vector<VarietyPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p);
  return out;
}

}  // namespace solvdeg
