#pragma once

#include <json.hpp>
#include <vector>

#include "solvdeg/chain.hpp"
#include "solvdeg/firstfall.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/invariants.hpp"
#include "solvdeg/macaulay.hpp"
#include "solvdeg/minrank.hpp"
#include "solvdeg/solver.hpp"

namespace solvdeg {

using Json = nlohmann::ordered_json;

Json to_json(const SolveReport& r);
Json to_json(const GroebnerBasis& G);
Json to_json(const std::vector<Polynomial>& polys);
Json to_json(const HilbertSeries& h);
Json to_json(const BettiTable& b);
Json to_json(const RegularityReport& r);
Json to_json(const FirstFallReport& r);
Json to_json(const MinRankReport& r);
Json to_json(const ChainReport& r);
Json points_to_json(const std::vector<VarietyPoint>& pts);

}  // namespace solvdeg
