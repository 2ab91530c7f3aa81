#pragma once

#include <vector>

#include "coxtour/tournament.hpp"

namespace coxtour {

// theta(Phi) = ||s_Phi||^2 / 2, an exact rational with denominator 8.
// Returned as the integer number of eighths.
long long theta_eighths(const RootSystem& sys);

// A Coxeter tournament realized as a classical tournament. Host players
// 1..n carry source labels +1..+n, players n+1..2n carry -1..-n, and the
// extra player 2n+1 (C/D sources) is labeled 0.
struct EmbeddedTournament {
  Tournament host;              // family A, 2n or 2n+1 players
  std::vector<int> player_map;  // host player h -> label
};

// B_n -> A_{2n-1} (2n players): solitaire outcomes become the i vs -i games;
// the host is antisymmetric and has score (s, -s).
EmbeddedTournament embed_B(const Tournament& t);

// D_n -> A_{2n} (2n+1 players): a cyclic triangle i -> -i -> 2n+1 -> i per
// player; host score (s, -s, 0).
EmbeddedTournament embed_D(const Tournament& t);

// C_n -> A_{2n} (2n+1 players): a won loop sends i over both -i and 2n+1,
// with 2n+1 over -i; host score (s, -s, 0).
EmbeddedTournament embed_C(const Tournament& t);

// Dispatch on family; throws for family A sources.
EmbeddedTournament embed(const Tournament& t);

}  // namespace coxtour
