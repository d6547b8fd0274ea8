#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "gallai/census.hpp"
#include "gallai/construction.hpp"
#include "gallai/decomposition.hpp"

namespace gallai {

// Ordered documents keep field order stable, so equal values serialize to
// equal bytes.
using json = nlohmann::ordered_json;

// Throws std::invalid_argument on malformed input instead of leaking the
// parser's own exception type.
json parse_text(const std::string& text);

json to_json(const ColoredMultigraph& g);
json to_json(const MixedGraph& m);
json to_json(const DecompositionSequence& seq);
json to_json(const CensusRecord& record);

// Parsers are strict: required fields only, unknown fields rejected, colors
// resolved against the document's palette. All failures throw
// std::invalid_argument.
ColoredMultigraph multigraph_from_json(const json& j);
MixedGraph mixed_graph_from_json(const json& j);
// A construction spec document is a mixed-graph document with two extra
// fields, "leaves" and "signatures".
ConstructionSpec construction_spec_from_json(const json& j);

}  // namespace gallai
