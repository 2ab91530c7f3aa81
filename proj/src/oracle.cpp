#include "coxtour/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "coxtour/majorization.hpp"
#include "coxtour/score_sequences.hpp"

namespace coxtour::oracle {

void check_enumeration_guard(const RootSystem& sys, bool force) {
  const int bits = sys.edge_count();
  const int limit = force ? kForcedBitGuard : kDefaultBitGuard;
  if (bits > limit) {
    std::string msg = sys.name() + " has " + std::to_string(bits) +
                      " outcome bits, above the enumeration guard of " + std::to_string(limit);
    if (!force) msg += " (pass --force to raise the guard to " +
                       std::to_string(kForcedBitGuard) + ")";
    throw guard_error(msg);
  }
}

std::uint64_t tournament_count(const RootSystem& sys, bool force) {
  check_enumeration_guard(sys, force);
  return std::uint64_t{1} << sys.edge_count();
}

void for_each_tournament(const RootSystem& sys,
                         const std::function<void(const Tournament&)>& fn, bool force) {
  const std::uint64_t total = tournament_count(sys, force);
  for (std::uint64_t code = 0; code < total; ++code) fn(Tournament::from_code(sys, code));
}

std::vector<ScoreVector> achieved_scores(const RootSystem& sys, bool force) {
  std::set<std::vector<int>> seen;
  for_each_tournament(
      sys, [&](const Tournament& t) { seen.insert(score(t).doubled); }, force);
  std::vector<ScoreVector> out;
  out.reserve(seen.size());
  for (auto& d : seen) out.emplace_back(d);
  return out;
}

namespace {

// Depth-first walk over the candidate box, pruned by the running |s| total.
void fill_lattice(const RootSystem& sys, int max_doubled, int parity, long long abs_budget,
                  std::vector<int>& partial, long long abs_sum,
                  std::vector<ScoreVector>& out) {
  if (static_cast<int>(partial.size()) == sys.rank) {
    ScoreVector s{partial};
    if (classify_score_sequence(sys, s) == ScoreCondition::Valid) out.push_back(std::move(s));
    return;
  }
  for (int d = -max_doubled; d <= max_doubled; ++d) {
    if (((d & 1) != parity) || abs_sum + std::abs(d) > abs_budget) continue;
    partial.push_back(d);
    fill_lattice(sys, max_doubled, parity, abs_budget, partial, abs_sum + std::abs(d), out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<ScoreVector> lattice_score_set(const RootSystem& sys) {
  if (sys.rank > 8)
    throw guard_error("lattice_score_set is guarded at rank <= 8, got " + sys.name());
  const ScoreVector s_phi = standard_score(sys);
  const int max_doubled = *std::max_element(s_phi.doubled.begin(), s_phi.doubled.end());
  int parity = 0;
  switch (sys.family) {
    case Family::A: parity = (sys.rank - 1) & 1; break;
    case Family::B: parity = 1; break;
    default: parity = 0; break;
  }
  long long abs_budget = 0;
  for (int d : s_phi.doubled) abs_budget += d;

  std::vector<ScoreVector> out;
  std::vector<int> partial;
  fill_lattice(sys, max_doubled, parity, abs_budget, partial, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void fill_permutahedron(int n, std::vector<int>& partial, long long sum,
                        std::vector<std::vector<int>>& out) {
  const long long target = static_cast<long long>(n) * (n - 1) / 2;
  if (static_cast<int>(partial.size()) == n) {
    if (sum == target) {
      std::vector<int> w_n(n);
      for (int k = 0; k < n; ++k) w_n[k] = k;
      if (majorize(partial, w_n)) out.push_back(partial);
    }
    return;
  }
  const int remaining = n - static_cast<int>(partial.size()) - 1;
  for (int v = 0; v <= n - 1; ++v) {
    if (sum + v > target || sum + v + static_cast<long long>(remaining) * (n - 1) < target)
      continue;
    partial.push_back(v);
    fill_permutahedron(n, partial, sum + v, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> permutahedron_points(int n) {
  if (n < 1 || n > 6)
    throw guard_error("permutahedron_points is guarded at n <= 6, got " + std::to_string(n));
  std::vector<std::vector<int>> out;
  std::vector<int> partial;
  fill_permutahedron(n, partial, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxtour::oracle
