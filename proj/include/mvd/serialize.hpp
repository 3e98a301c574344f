#pragma once

#include <json.hpp>

#include "mvd/canonical.hpp"
#include "mvd/reducer.hpp"
#include "mvd/star_pattern.hpp"
#include "mvd/tangent.hpp"

namespace mvd {

using json = nlohmann::ordered_json;

// Structure descriptor, e.g.
// {"blocks":[{"kind":"H","m":2,"lambda":{"re":0.5,"im":0}},
//            {"kind":"Gamma","n":3},{"kind":"J0","k":2}]}
json structure_to_json(const CanonicalStructure& s);
CanonicalStructure structure_from_json(const json& j);

// {"rows":n,"cols":n,"stars":[[i,j],...]} with 1-based indices.
json pattern_to_json(const StarPattern& p);
StarPattern pattern_from_json(const json& j);

json report_to_json(const TransversalityReport& r);
json trace_record_to_json(const TraceRecord& r);

// Matrices are embedded in the plain-text matrix format.
json result_to_json(const ReductionResult& r);

} // namespace mvd
