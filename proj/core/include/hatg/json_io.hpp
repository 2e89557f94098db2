#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hatg/book.hpp"
#include "hatg/clique_handler.hpp"
#include "hatg/graph.hpp"
#include "hatg/linear.hpp"
#include "hatg/planar.hpp"
#include "hatg/strategy.hpp"

namespace hatg::json {

// Serializers capture the mathematical object only; in-process verification
// stamps (cover_verified, OntoFamily::verified) never cross the boundary and
// come back cleared, so loaded objects must be re-verified before use in a
// construction.

nlohmann::json to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Coloring& coloring);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StrategyProfile& profile);
StrategyProfile profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KnownSet& set);
KnownSet known_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const linear::LinearStrategy& strategy);
linear::LinearStrategy linear_from_json(const nlohmann::json& j);

// Implicit families carry their kind and strategy; materialized ones list
// members as ascending ground indices.
nlohmann::json to_json(const linear::SpreadFamily& family);
linear::SpreadFamily spread_family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const book::OntoFamily& family);
book::OntoFamily onto_family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const planar::PairFunctionFamily& family);
planar::PairFunctionFamily pair_family_from_json(const nlohmann::json& j);

// Parse failures surface as InvalidInputError carrying the parser's
// position-annotated message (plus the path for file loads).
nlohmann::json parse_text(const std::string& text);
nlohmann::json load_file(const std::string& path);

// Canonical dump: sorted keys (the library's object order), two-space
// indent, trailing newline.  Byte-stable across runs for equal values.
std::string dump_report(const nlohmann::json& j);
void write_file(const std::string& path, const nlohmann::json& j);

} // namespace hatg::json
