#include "coxtour/score_sequences.hpp"

#include <algorithm>
#include <numeric>

#include "coxtour/majorization.hpp"
#include "coxtour/signed_permutation.hpp"

namespace coxtour {

const char* condition_name(ScoreCondition c) {
  switch (c) {
    case ScoreCondition::Valid: return "valid";
    case ScoreCondition::Lattice: return "lattice";
    case ScoreCondition::Parity: return "parity";
    case ScoreCondition::Submajorization: return "submajorization";
    case ScoreCondition::Majorization: return "majorization";
  }
  throw internal_error("bad ScoreCondition value");
}

namespace {

std::vector<int> standard_win_vector(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

std::vector<int> abs_doubled(const ScoreVector& s) {
  std::vector<int> out = s.doubled;
  for (int& d : out)
    if (d < 0) d = -d;
  return out;
}

}  // namespace

std::vector<std::pair<ScoreCondition, bool>> score_condition_report(const RootSystem& sys,
                                                                    const ScoreVector& s) {
  const int n = sys.rank;
  if (s.size() != n)
    throw std::invalid_argument("score length " + std::to_string(s.size()) +
                                " does not match rank of " + sys.name());

  std::vector<std::pair<ScoreCondition, bool>> report;

  if (sys.family == Family::A) {
    // Score form of the classical case: w = s + (n-1)/2 * 1 must be an
    // integer vector majorized by (0,...,n-1).
    bool lattice = true;
    for (int d : s.doubled)
      if ((d + n - 1) & 1) lattice = false;
    report.emplace_back(ScoreCondition::Lattice, lattice);
    if (lattice) {
      std::vector<int> w(n);
      for (int k = 0; k < n; ++k) w[k] = (s.doubled[k] + n - 1) / 2;
      report.emplace_back(ScoreCondition::Majorization, majorize(w, standard_win_vector(n)));
    }
    return report;
  }

  if (sys.family == Family::B) {
    report.emplace_back(ScoreCondition::Lattice, s.all_odd());
  } else {
    const bool lattice = s.all_even();
    report.emplace_back(ScoreCondition::Lattice, lattice);
    if (lattice) {
      // sum s_i = C(n,2) + delta*n mod 2, with delta = 1 in C and 0 in D
      long long target = static_cast<long long>(n) * (n - 1) / 2;
      if (sys.family == Family::C) target += n;
      report.emplace_back(ScoreCondition::Parity,
                          ((s.sum_doubled() / 2 - target) & 1LL) == 0);
    }
  }
  report.emplace_back(ScoreCondition::Submajorization,
                      weak_submajorize(abs_doubled(s), standard_score(sys).doubled));
  return report;
}

ScoreCondition classify_score_sequence(const RootSystem& sys, const ScoreVector& s) {
  for (const auto& [condition, passed] : score_condition_report(sys, s))
    if (!passed) return condition;
  return ScoreCondition::Valid;
}

bool is_score_sequence(const RootSystem& sys, const ScoreVector& s) {
  return classify_score_sequence(sys, s) == ScoreCondition::Valid;
}

Tournament construct_A_win(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  const RootSystem sys(Family::A, n);
  if (!majorize(w, standard_win_vector(n)))
    throw std::invalid_argument("win vector is not majorized by (0,...,n-1)");

  std::vector<int> need(n + 1, 0);  // 1-indexed by player
  for (int i = 1; i <= n; ++i) need[i] = w[i - 1];
  std::vector<std::uint8_t> done(n + 1, 0);
  Tournament t(sys);

  auto set_game = [&](int winner, int loser) {
    if (winner > loser)
      t.outcomes[edge_index(sys, SignedEdge::negative(winner, loser))] = 1;
    else
      t.outcomes[edge_index(sys, SignedEdge::negative(loser, winner))] = 0;
  };

  for (int round = 0; round < n; ++round) {
    int p = 0;
    for (int i = 1; i <= n; ++i)
      if (!done[i] && (p == 0 || need[i] > need[p])) p = i;

    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!done[i] && i != p) rest.push_back(i);
    // p beats the weakest opponents; the rest absorb its losses.
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return need[a] < need[b]; });
    if (need[p] < 0 || need[p] > static_cast<int>(rest.size()))
      throw internal_error("construct_A_win: requirement out of range");
    for (std::size_t r = 0; r < rest.size(); ++r) {
      if (r < static_cast<std::size_t>(need[p])) {
        set_game(p, rest[r]);
      } else {
        set_game(rest[r], p);
        if (--need[rest[r]] < 0)
          throw internal_error("construct_A_win: forced a win onto a satisfied player");
      }
    }
    need[p] = 0;
    done[p] = 1;
  }

  if (win_vector(t) != w) throw internal_error("construct_A_win: win vector check failed");
  return t;
}

namespace {

void flip_pair(Tournament& t, int i, int j) {
  const int a = std::max(i, j), b = std::min(i, j);
  t.outcomes[edge_index(t.system, SignedEdge::negative(a, b))] ^= 1;
  t.outcomes[edge_index(t.system, SignedEdge::positive(a, b))] ^= 1;
}

void require_cd(const RootSystem& sys, const char* op) {
  if (sys.family != Family::C && sys.family != Family::D)
    throw std::invalid_argument(std::string(op) + " applies to families C and D only");
}

}  // namespace

Tournament apply_signs(const Tournament& t, const ScoreVector& s) {
  require_cd(t.system, "apply_signs");
  if (score(t) != s.abs())
    throw std::invalid_argument("apply_signs: tournament score is not |s|");

  Tournament out = t;
  const int n = t.system.rank;
  for (int i = 1; i <= n; ++i) {
    if (s.doubled[i - 1] >= 0) continue;
    // Reverse every pair game in which the opponent earns net 0 from i,
    // i.e. i wins both or loses both; the opponent stays at net 0 afterwards.
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      if (wins_competitive(out, i, j) == collaborative_won(out, i, j)) flip_pair(out, i, j);
    }
    if (t.system.has_loops())
      out.outcomes[edge_index(t.system, SignedEdge::loop(i))] ^= 1;
  }

  if (score(out) != s) throw internal_error("apply_signs: score check failed");
  return out;
}

Tournament reduce_even_jumps(const Tournament& t, const ScoreVector& s) {
  require_cd(t.system, "reduce_even_jumps");
  const ScoreVector z = score(t);
  const int n = t.system.rank;
  if (s.size() != n) throw std::invalid_argument("reduce_even_jumps: length mismatch");
  for (int k = 0; k < n; ++k) {
    const int zk = z.doubled[k], sk = s.doubled[k];
    if (sk < 0 || sk > zk || ((zk - sk) % 4) != 0)
      throw std::invalid_argument(
          "reduce_even_jumps: target must satisfy 0 <= s <= z with matching parities");
  }

  Tournament out = t;
  for (int i = 1; i <= n; ++i) {
    int remaining = (z.doubled[i - 1] - s.doubled[i - 1]) / 4;  // (z_i - s_i)/2 in halves
    if (remaining == 0) continue;
    for (int j = 1; j <= n && remaining > 0; ++j) {
      if (j == i) continue;
      if (wins_competitive(out, i, j) && collaborative_won(out, i, j)) {
        flip_pair(out, i, j);
        --remaining;
      }
    }
    if (remaining > 0 && t.system.has_loops() && solitaire_won(out, i)) {
      out.outcomes[edge_index(t.system, SignedEdge::loop(i))] ^= 1;
      --remaining;
    }
    if (remaining > 0)
      throw internal_error("reduce_even_jumps: ran out of both-won games for player " +
                           std::to_string(i));
  }

  if (score(out) != s) throw internal_error("reduce_even_jumps: score check failed");
  return out;
}

const TraceStage* ConstructionTrace::find(const std::string& name) const {
  for (const auto& stage : stages)
    if (stage.name == name) return &stage;
  return nullptr;
}

namespace {

void push_vec(ConstructionTrace& tr, const char* name, std::vector<int> v) {
  tr.stages.push_back({name, std::move(v), std::nullopt});
}

void push_tour(ConstructionTrace& tr, const char* name, Tournament t) {
  tr.stages.push_back({name, {}, std::move(t)});
}

// Shared C/D pipeline: lift |s| to a majorized integer vector, fix parities,
// realize it through a classical tournament, then walk down to |s| and flip
// the signs of the weak players.
Tournament construct_cd(const RootSystem& sys, const ScoreVector& s, ConstructionTrace& tr) {
  const int n = sys.rank;
  const std::vector<int> x = s.abs().as_ints();
  const std::vector<int> y = standard_score(sys).as_ints();

  const std::vector<int> z = lift_to_majorization(x, y);
  push_vec(tr, "lift", z);
  const std::vector<int> z2 = match_parity(x, z, y);
  push_vec(tr, "parity", z2);

  std::vector<int> wa = z2;
  if (sys.family == Family::C)
    for (int& v : wa) --v;  // a won loop per player contributes 1 to each score
  Tournament ta = construct_A_win(wa);
  push_tour(tr, "baseA", ta);

  Tournament base(sys);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      base.outcomes[edge_index(sys, SignedEdge::negative(i, j))] =
          ta.outcomes[edge_index(ta.system, SignedEdge::negative(i, j))];
      base.outcomes[edge_index(sys, SignedEdge::positive(i, j))] = 1;
    }
  if (sys.family == Family::C)
    for (int i = 1; i <= n; ++i) base.outcomes[edge_index(sys, SignedEdge::loop(i))] = 1;
  push_tour(tr, sys.family == Family::C ? "baseC" : "baseD", base);

  Tournament reduced = reduce_even_jumps(base, ScoreVector::from_ints(x));
  push_tour(tr, "evenJumps", reduced);
  Tournament signed_t = apply_signs(reduced, s);
  push_tour(tr, "signs", signed_t);
  return signed_t;
}

// B reduction: order players by |s_i|, settle the half edges first, and build
// the remaining integer score as a D tournament.
Tournament construct_b(const RootSystem& sys, const ScoreVector& s, ConstructionTrace& tr) {
  const int n = sys.rank;

  if (n == 1) {
    Tournament t(sys);
    t.outcomes[0] = s.doubled[0] > 0 ? 1 : 0;
    push_tour(tr, "halfEdges", t);
    return t;
  }

  std::vector<int> order(n);  // sorted position -> original index (0-based)
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(s.doubled[a]) < std::abs(s.doubled[b]);
  });

  std::vector<int> sorted_doubled(n), eps(n), target(n);
  for (int p = 0; p < n; ++p) {
    sorted_doubled[p] = s.doubled[order[p]];
    eps[p] = sorted_doubled[p] > 0 ? 1 : -1;  // never 0: entries are half-integers
    target[p] = (sorted_doubled[p] - eps[p]) / 2;
  }
  long long target_sum = 0;
  for (int v : target) target_sum += v;
  if (((target_sum - static_cast<long long>(n) * (n - 1) / 2) & 1LL) != 0) {
    // Flip the most neutral player's solitaire game to fix the D parity.
    eps[0] = -eps[0];
    target[0] = (sorted_doubled[0] - eps[0]) / 2;
  }

  const RootSystem dsys(Family::D, n);
  Tournament dpart = construct_cd(dsys, ScoreVector::from_ints(target), tr);

  Tournament sorted_b(sys);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      sorted_b.outcomes[edge_index(sys, SignedEdge::negative(i, j))] =
          dpart.outcomes[edge_index(dsys, SignedEdge::negative(i, j))];
      sorted_b.outcomes[edge_index(sys, SignedEdge::positive(i, j))] =
          dpart.outcomes[edge_index(dsys, SignedEdge::positive(i, j))];
    }
  for (int p = 0; p < n; ++p)
    sorted_b.outcomes[edge_index(sys, SignedEdge::half(p + 1))] = eps[p] > 0 ? 1 : 0;
  push_tour(tr, "halfEdges", sorted_b);

  std::vector<int> unsort(n);
  for (int p = 0; p < n; ++p) unsort[p] = order[p] + 1;
  return apply_signed_permutation(sorted_b, SignedPermutation(std::move(unsort)));
}

}  // namespace

Constructed construct(const RootSystem& sys, const ScoreVector& s) {
  const ScoreCondition cond = classify_score_sequence(sys, s);
  if (cond != ScoreCondition::Valid)
    throw std::invalid_argument("not a score sequence of " + sys.name() + ": " +
                                condition_name(cond));

  ConstructionTrace trace;
  Tournament result = [&] {
    switch (sys.family) {
      case Family::A: {
        std::vector<int> w(sys.rank);
        for (int k = 0; k < sys.rank; ++k) w[k] = (s.doubled[k] + sys.rank - 1) / 2;
        Tournament t = construct_A_win(w);
        push_tour(trace, "baseA", t);
        return t;
      }
      case Family::B:
        return construct_b(sys, s, trace);
      case Family::C:
      case Family::D:
        return construct_cd(sys, s, trace);
    }
    throw internal_error("bad Family value");
  }();

  if (score(result) != s) throw internal_error("construct: output score check failed");
  return {std::move(result), std::move(trace)};
}

}  // namespace coxtour
