#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxtour/score_vector.hpp"
#include "coxtour/types.hpp"

namespace coxtour {

// A Coxeter tournament on the complete Phi-graph: one outcome bit per
// positive root, in canonical edge order. 1 = won, 0 = lost.
struct Tournament {
  RootSystem system;
  std::vector<std::uint8_t> outcomes;

  explicit Tournament(RootSystem sys);
  Tournament(RootSystem sys, std::vector<std::uint8_t> bits);

  static Tournament all_wins(const RootSystem& sys);
  static Tournament all_losses(const RootSystem& sys);

  // Bitstring <-> code. The bitstring lists edge outcomes in canonical order;
  // codes are the bitstring read as a binary number (edge 0 most significant),
  // so increasing code order is lexicographic bitstring order.
  static Tournament from_bits_string(const RootSystem& sys, const std::string& bits);
  static Tournament from_code(const RootSystem& sys, std::uint64_t code);
  std::string bits_string() const;
  std::uint64_t code() const;  // requires <= 63 edges

  bool win(const SignedEdge& e) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;
};

// s(T) = sum over edges of (w_e - 1/2) * root vector, exact.
ScoreVector score(const Tournament& t);

// 2 s_Phi: the score of the all-wins tournament (half the sum of the
// positive roots, doubled).
ScoreVector standard_score(const RootSystem& sys);

// Flips the outcome of exactly the given edges. Throws on an edge that is
// not a positive root of the system, and on duplicates (a malformed move).
Tournament reverse(const Tournament& t, const std::vector<SignedEdge>& edges);

// True iff the oriented roots of `edges` sum to zero, i.e. reversing them
// preserves the score.
bool is_neutral_subset(const Tournament& t, const std::vector<SignedEdge>& edges);

// Outcomes extended to all i != j: w^-_{ji} = 1 - w^-_{ij}, w^+ symmetric.
bool wins_competitive(const Tournament& t, int i, int j);
bool collaborative_won(const Tournament& t, int i, int j);
bool solitaire_won(const Tournament& t, int i);

// Competitive wins per player; family A only.
std::vector<int> win_vector(const Tournament& t);

}  // namespace coxtour
