#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxtour/score_vector.hpp"
#include "coxtour/tournament.hpp"

namespace coxtour {

// Why a vector fails to be a score sequence, if it does.
enum class ScoreCondition {
  Valid,
  Lattice,          // wrong integrality class for the family
  Parity,           // sum congruence fails (C/D)
  Submajorization,  // |s| not weakly sub-majorized by s_Phi (B/C/D)
  Majorization,     // shifted win vector not majorized by (0..n-1) (A)
};

const char* condition_name(ScoreCondition c);

// Membership test for Score(Phi). B: half-integers with |s| <=_w s_B.
// C: integers, sum = C(n,2)+n mod 2, |s| <=_w s_C. D: integers,
// sum = C(n,2) mod 2, |s| <=_w s_D. A: s + (n-1)/2 * 1 an integer vector
// majorized by (0,...,n-1). Throws on length mismatch.
ScoreCondition classify_score_sequence(const RootSystem& sys, const ScoreVector& s);
bool is_score_sequence(const RootSystem& sys, const ScoreVector& s);

// Pass/fail per condition, in check order. Conditions that only make sense
// for integer vectors (the sum congruence, the shifted win vector) are
// omitted when the lattice condition already failed.
std::vector<std::pair<ScoreCondition, bool>> score_condition_report(const RootSystem& sys,
                                                                    const ScoreVector& s);

// Realizes an integer win vector w majorized by (0,...,n-1) as a classical
// tournament: repeatedly take the player with the largest remaining
// requirement; it beats the opponents with the smallest remaining
// requirements and its losses are absorbed by the largest (smallest-index
// tie-breaks). The result is validated against w before returning.
Tournament construct_A_win(const std::vector<int>& w);

// Given a C/D tournament with score |s|, flips each negative player's
// same-outcome pair games (and in C its loop) so the score becomes s.
Tournament apply_signs(const Tournament& t, const ScoreVector& s);

// Given a C/D tournament with score z and a target 0 <= s <= z with matching
// parities, reverses both-won pair games (and in C, won loops) to walk each
// coordinate down by steps of 2. Players are processed in increasing index;
// reversal partners are the smallest-indexed eligible opponents, loop last.
Tournament reduce_even_jumps(const Tournament& t, const ScoreVector& s);

// One recorded step of a construction run.
struct TraceStage {
  std::string name;  // lift | parity | signs | evenJumps | baseA | baseD | baseC | halfEdges
  std::vector<int> vec;               // integer intermediate, when applicable
  std::optional<Tournament> tournament;
};

struct ConstructionTrace {
  std::vector<TraceStage> stages;

  const TraceStage* find(const std::string& name) const;
};

struct Constructed {
  Tournament tournament;
  ConstructionTrace trace;
};

// Builds a witness tournament for any valid score sequence and the audit
// trail of intermediates. Throws std::invalid_argument naming the violated
// condition when s is not a score sequence, and internal_error if the final
// self-check score(result) == s ever fails.
Constructed construct(const RootSystem& sys, const ScoreVector& s);

}  // namespace coxtour
