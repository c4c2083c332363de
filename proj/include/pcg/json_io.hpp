#pragma once

#include "pcg/graph.hpp"
#include "pcg/pcr.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace pcg {

using Json = nlohmann::ordered_json;

/// {"tree": {"vertices": [...], "edges": [["u","v","num/den"], ...]},
///  "d_min": "num/den", "d_max": "num/den"}
Json pcr_to_json(const Pcr& p);
/// Throws ParseError on schema violations; the result is validated.
Pcr pcr_from_json(const Json& j);

std::string dump_pcr(const Pcr& p);
Pcr parse_pcr(std::string_view text);

/// {"vertices": [...], "edges": [["u","v"], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Wraps nlohmann parse errors into ParseError.
Json parse_json(std::string_view text);

}  // namespace pcg
