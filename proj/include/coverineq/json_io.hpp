#pragma once

#include <json.hpp>

#include "coverineq/covers.hpp"
#include "coverineq/inequalities.hpp"
#include "coverineq/logconcave.hpp"
#include "coverineq/polytope.hpp"

namespace coverineq {

using json = nlohmann::json;

// Wire formats.  Indices are 1-based on the wire; rationals are strings
// ("p/q", integers, or decimals on input; canonical form on output) so that
// round trips are bit-exact.

json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const json& j, int n);

json cover_to_json(const CoverFamily& c);
CoverFamily cover_from_json(const json& j);

json polytope_to_json(const RationalPolytope& p);
RationalPolytope polytope_from_json(const json& j);

json logconcave_to_json(const LogConcaveFn& f);
LogConcaveFn logconcave_from_json(const json& j);

json report_to_json(const InequalityReport& r);

// Value rendering: exact values as "p/q" strings, approximations as numbers.
json value_to_json(const Value& v);

}  // namespace coverineq
