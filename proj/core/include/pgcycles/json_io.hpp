#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pgcycles/blowup.hpp"
#include "pgcycles/graph.hpp"

namespace pgc {

using Json = nlohmann::json;

/// Throws IoError naming the source and byte offset of a syntax error.
Json parse_json(std::string_view text, const std::string& source);
Json read_json_file(const std::string& path);

/// {"vertices":[{"id","self_intersection","genus"}],"edges":[[a,b,mult]]}.
/// The multiplicity may be omitted. Schema violations throw ValidationError.
GraphPtr graph_from_json(const Json& j);
/// Canonical form: vertices sorted by id, edges as sorted pairs in sorted order.
Json graph_to_json(const DualGraph& g);

/// Integers as JSON numbers, everything else as "p/q".
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Accepts {"coefficients":{id: value}} or the bare map.
Cycle cycle_from_json(const Json& j, const GraphPtr& g);
Json cycle_to_json(const Cycle& z);

Json blowup_to_json(const BlowupMap& m);

}  // namespace pgc
