#pragma once

#include <json.hpp>

#include "mick/suites.hpp"

namespace mick {

using json = nlohmann::ordered_json;

// terms as [c, qexp, [texp...]], sorted by total degree then lexicographically;
// odd doubled exponents are written as "k/2" strings
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);
json ratfn_to_json(const RatFn& r);
RatFn ratfn_from_json(const json& j);
json elt_to_json(const FreeElt& x);
FreeElt elt_from_json(const json& j);

json basis_to_json(const BasisForm& b);
json plus_basis_to_json(const std::vector<std::pair<int, BasisForm>>& parts);
std::string plus_basis_str(const std::vector<std::pair<int, BasisForm>>& parts);
// "3,1/2,-1" and "i,1,-i"; an empty phase string means all 1; throws std::invalid_argument
WeightSpec parse_weight(const std::string& values, const std::string& phases, int dim);

json report_to_json(const DecompositionReport& r);
json suite_to_json(const SuiteReport& r, bool timing);

}  // namespace mick
