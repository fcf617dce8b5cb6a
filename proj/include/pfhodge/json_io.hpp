#ifndef PFHODGE_JSON_IO_HPP
#define PFHODGE_JSON_IO_HPP

#include "pfhodge/analysis.hpp"
#include "pfhodge/base_change.hpp"
#include "pfhodge/datasets.hpp"
#include "pfhodge/hodge_calc.hpp"

#include <json.hpp>

namespace pfhodge {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

Json rational_list(const std::vector<BigRational>& xs);
std::vector<BigRational> parse_rational_list(const Json& j);

Json to_json(const RiemannScheme& s);
Json to_json(const JordanType& j);
Json to_json(const VHSProfile& v);
Json to_json(const CoverSpec& c);
Json results_json(const VHSProfile& v, const DegreeVector& deg, const HodgeNumbers& h);

JordanType jordan_from_json(const Json& j);
VHSProfile profile_from_json(const Json& j);
CoverSpec cover_from_json(const Json& j);
// {"<point key>": [{"alpha": "p/q", "size": n}, ...]}
Annotations annotations_from_json(const Json& j);

Json datasets_json();

}  // namespace pfhodge

#endif
