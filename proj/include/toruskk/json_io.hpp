#pragma once

#include <json.hpp>

#include "toruskk/graded_map.hpp"
#include "toruskk/oracle.hpp"
#include "toruskk/report.hpp"
#include "toruskk/subtorus.hpp"

namespace toruskk {

using Json = nlohmann::ordered_json;

// integers within the 64-bit range stay JSON numbers, larger ones
// become decimal strings
Json intToJson(const Int& v);

// {"d":2,"variance":"x","side":"dual","terms":[{"idx":[1],"c":-1},...]}
// terms in canonical monomial order, indices ascending, coefficients
// nonzero; coefficients outside the 64-bit range serialize as strings
Json classToJson(const ExteriorClass& cls);
ExteriorClass classFromJson(const Json& j);

// {"d":2,"side":"base","basis":"1;1"} with the matrix text format
Json subtorusToJson(const OrientedSubtorus& t);
OrientedSubtorus subtorusFromJson(const Json& j);

Json torusPointToJson(const TorusPoint& p); // array of fraction strings
Json intersectionToJson(const IntersectionData& data);

// monomial-labeled matrix dump of a graded map
Json mapToJson(const GradedLinearMap& m);
std::string mapToAlignedText(const GradedLinearMap& m);

Json reportToJson(const VerifyReport& r);

std::string monomialLabel(const IndexSet& idx);

} // namespace toruskk
