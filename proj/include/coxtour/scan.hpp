#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coxtour/score_vector.hpp"
#include "coxtour/tournament.hpp"

namespace coxtour::scan {

// OpenMP kernels for exhaustive fiber work. Each has the same observable
// behavior with parallel = false; the serial references in oracle.hpp are the
// correctness baseline for tests.
struct Options {
  bool parallel = true;
  bool force = false;
};

// Packed doubled score: coordinate k in byte (7-k), offset +128. Requires
// rank <= 8, which every enumerable system satisfies. Key order equals
// lexicographic order on doubled vectors.
using ScoreKey = std::uint64_t;

ScoreKey pack_score(const std::vector<int>& doubled);
std::vector<int> unpack_score(ScoreKey key, int n);
ScoreKey score_key(const ScoreVector& s);

// Distinct achieved scores, sorted by key.
std::vector<ScoreKey> achieved_score_keys(const RootSystem& sys, const Options& opts = {});

// All fibers: (score key, member codes ascending), sorted by key. The fiber
// sizes add up to 2^|Phi^+|.
std::vector<std::pair<ScoreKey, std::vector<std::uint32_t>>> collect_fibers(
    const RootSystem& sys, const Options& opts = {});

// Members of a single fiber, codes ascending.
std::vector<std::uint32_t> fiber_codes(const RootSystem& sys, ScoreKey key,
                                       const Options& opts = {});

struct RegularityReport {
  bool ok = true;
  std::uint64_t tournaments = 0;
  std::uint32_t counterexample_code = 0;  // minimal failing code when !ok
};

// Checks weighted generator count == (||s_Phi||^2 - ||s||^2)/2 for every
// tournament of the system.
RegularityReport regularity_scan(const RootSystem& sys, const Options& opts = {});

}  // namespace coxtour::scan
