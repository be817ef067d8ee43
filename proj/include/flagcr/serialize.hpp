#pragma once

#include <json.hpp>

#include "flagcr/complex.hpp"
#include "flagcr/homology.hpp"
#include "flagcr/theorems.hpp"

namespace flagcr {

// JSON views of the core objects.  All output is deterministic: nlohmann
// objects keep keys sorted and every sequence below has a canonical order.
nlohmann::json to_json(const Mat& m);
nlohmann::json to_json(const Subspace& w);
nlohmann::json to_json(const Flag& fl);
nlohmann::json to_json(const HomologyReport& rep);
nlohmann::json complex_summary_json(const SubComplex& y);
nlohmann::json to_json(const CrVerdict& v);
nlohmann::json to_json(const CentreReport& rep);
nlohmann::json to_json(const LoewyCentres& lc);
nlohmann::json to_json(const FixedPointVerdict& v);
nlohmann::json to_json(const UnipotentReport& rep);
nlohmann::json to_json(const ConvexityResult& res);

std::string type_key(const std::vector<int>& type);

}  // namespace flagcr
