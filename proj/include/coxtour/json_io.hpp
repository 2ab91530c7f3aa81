#pragma once

#include <string>

#include <json.hpp>

#include "coxtour/embeddings.hpp"
#include "coxtour/generators.hpp"
#include "coxtour/interchange.hpp"
#include "coxtour/score_sequences.hpp"
#include "coxtour/score_vector.hpp"
#include "coxtour/tournament.hpp"

namespace coxtour {

using json = nlohmann::ordered_json;

// {"family":"D","n":3,"bits":"010110"}
json tournament_to_json(const Tournament& t);

// Accepts the bits form above or the expanded form
// {"family":..,"n":..,"edges":[{"kind":"neg","i":2,"j":1,"win":true},...]};
// the expanded form must list every positive root exactly once.
Tournament tournament_from_json(const json& j);

json score_to_json(const ScoreVector& s);  // array of "3"/"-1/2" strings
ScoreVector score_from_json(const json& j);

json trace_to_json(const ConstructionTrace& trace);
json counts_to_json(const GeneratorCounts& c);
json graph_to_json(const InterchangeGraph& g);
std::string graph_to_dot(const InterchangeGraph& g);  // parallel edges repeated
json embedding_to_json(const EmbeddedTournament& e);

}  // namespace coxtour
