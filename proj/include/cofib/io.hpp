#pragma once

// JSON serialization of both carriers and of blowup and replacement
// certificates; DOT and TikZ figures.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cofib/automaton.hpp"
#include "cofib/blowup.hpp"
#include "cofib/relpcs.hpp"

namespace cofib::io {

using nlohmann::json;

/// Input that does not match the schema. The CLI maps it to exit code 2.
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"dim_bound": n, "cubes": {"0": [ids], ...}, "faces": [{"cube": id, "word": "+0-", "targets": [ids]}]}.
/// The relations are taken exactly as given; validate() judges closure and grading.
RelPCS pcs_from_json(const json& j);
/// Every stored relation, grouped by cube and word.
json to_json(const RelPCS& p);

/// {"alphabet": ["a"], "states": [...], "initial": [...], "accepting": [...],
///  "edges": [{"name": id, "label": "a", "sources": [...], "targets": [...]}]}; "name" is optional.
RelAutomaton automaton_from_json(const json& j);
json to_json(const RelAutomaton& a);

/// One entry per blowup cube: {"cube", "epsilon", "chart": {brick cell: image}}.
json provenance_json(const BlowupResult& b, const RelPCS& p);
json certificate_json(const CofibCertificate& c);
/// {"cell": image} for a morphism.
json map_json(const cells::Complex& source, const cells::Complex& target, const cells::CellMap& map);

json parse_file(const std::string& path);

/// Cubes of dimension >= 1 become intermediate nodes joined to their faces.
std::string to_dot(const RelPCS& p);
/// Edges become intermediate nodes with lines from their sources and arrows to their targets.
std::string to_dot(const RelAutomaton& a);
/// Cubes grouped by dimension. Throws std::invalid_argument when dim_bound > 2.
std::string to_tikz(const RelPCS& p);

}  // namespace cofib::io
