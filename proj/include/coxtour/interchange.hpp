#pragma once

#include <cstdint>
#include <vector>

#include "coxtour/generators.hpp"
#include "coxtour/score_vector.hpp"
#include "coxtour/tournament.hpp"

namespace coxtour {

struct InterchangeEdge {
  int u;  // indices into vertices, u < v
  int v;
  int multiplicity;  // 2 for clover moves
  GeneratorKind kind;
};

// The multigraph on one score fiber: vertices are all tournaments with the
// given score (sorted by canonical bitstring), edges are generator reversals.
struct InterchangeGraph {
  RootSystem system;
  ScoreVector fiber_score;
  long long expected_degree = 0;
  std::vector<Tournament> vertices;
  std::vector<InterchangeEdge> edges;
};

// Enumerates the fiber and connects generator moves. Refuses systems with
// more than 24 outcome bits unless `force` raises the guard to 28.
InterchangeGraph build_interchange_graph(const RootSystem& sys, const ScoreVector& s,
                                         bool force = false);

// Same graph, built over an already-collected fiber (codes ascending).
InterchangeGraph build_interchange_graph_from_codes(const RootSystem& sys,
                                                    const ScoreVector& s,
                                                    const std::vector<std::uint32_t>& codes);

bool is_connected(const InterchangeGraph& g);

// True iff every vertex's incident multiplicities sum to expected_degree.
bool is_regular(const InterchangeGraph& g);

}  // namespace coxtour
