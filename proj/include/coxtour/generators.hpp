#pragma once

#include <vector>

#include "coxtour/score_vector.hpp"
#include "coxtour/tournament.hpp"

namespace coxtour {

enum class GeneratorKind : std::uint8_t {
  CyclicTriangle,
  BalancedTriangle,
  NeutralPair,    // B only
  NeutralClover,  // C only
};

const char* generator_kind_name(GeneratorKind k);

// Finer shape labels. The aggregate counts are the meaningful quantities;
// these names only distinguish the sign patterns within a kind.
enum class GeneratorPattern : std::uint8_t {
  Cyclic,
  Balanced,
  PairCompetitive,
  PairCollaborativeWon,
  PairCollaborativeLost,
  CloverAtNetWinner,
  CloverAtNetLoser,
};

const char* generator_pattern_name(GeneratorPattern p);

// A located neutral configuration: reversing `support` preserves the score.
struct GeneratorCopy {
  GeneratorKind kind;
  GeneratorPattern pattern;
  std::vector<SignedEdge> support;
  int weight;  // 2 for clovers, 1 otherwise
};

struct GeneratorCounts {
  long long cyclic = 0;
  long long balanced = 0;
  long long pairs = 0;
  long long clovers = 0;

  long long weighted_total() const { return cyclic + balanced + pairs + 2 * clovers; }

  friend bool operator==(const GeneratorCounts&, const GeneratorCounts&) = default;
};

// All zero-sum copies of the four template shapes, in a fixed scan order
// (triples ascending, then pairs ascending). At most one neutral pair and at
// most one clover can exist per pair of players.
std::vector<GeneratorCopy> find_generators(const Tournament& t);

// Allocation-free tally of the same copies.
GeneratorCounts generator_counts(const Tournament& t);

// (||s_Phi||^2 - ||s||^2) / 2, computed exactly in doubled integers. Throws
// std::invalid_argument when s is not a score sequence and internal_error if
// the value fails to be a non-negative integer (which would falsify the
// degree formula).
long long degree(const RootSystem& sys, const ScoreVector& s);

struct InterchangeNeighbor {
  Tournament tournament;
  int multiplicity;
  GeneratorKind kind;
};

// One neighbor per generator copy; clover moves carry multiplicity 2. Every
// neighbor has the same score as t and the multiplicities sum to
// degree(system, score(t)).
std::vector<InterchangeNeighbor> interchange_neighbors(const Tournament& t);

}  // namespace coxtour
