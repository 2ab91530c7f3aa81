#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coxtour/score_vector.hpp"
#include "coxtour/tournament.hpp"

namespace coxtour::oracle {

// Exhaustive enumeration stays below 2^24 tournaments by default; `force`
// raises the ceiling to 2^28.
inline constexpr int kDefaultBitGuard = 24;
inline constexpr int kForcedBitGuard = 28;

// Throws guard_error when the system's bit count exceeds the active guard.
void check_enumeration_guard(const RootSystem& sys, bool force = false);

std::uint64_t tournament_count(const RootSystem& sys, bool force = false);

// Serial reference enumeration: every tournament exactly once, in increasing
// canonical-bitstring order.
void for_each_tournament(const RootSystem& sys,
                         const std::function<void(const Tournament&)>& fn,
                         bool force = false);

// Ground-truth score set {score(t)}, sorted; serial reference.
std::vector<ScoreVector> achieved_scores(const RootSystem& sys, bool force = false);

// All candidate vectors in the box |s_i| <= max(s_Phi) (with the family's
// integrality class) that satisfy the score-sequence conditions. Guarded at
// rank <= 8.
std::vector<ScoreVector> lattice_score_set(const RootSystem& sys);

// {w in Z^n : w majorized by (0,...,n-1)}; the lattice points matched by the
// win vectors of all classical tournaments. Guarded at n <= 6.
std::vector<std::vector<int>> permutahedron_points(int n);

}  // namespace coxtour::oracle
