#include "coxtour/generators.hpp"

#include "coxtour/score_sequences.hpp"

namespace coxtour {

const char* generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::CyclicTriangle: return "cyclic";
    case GeneratorKind::BalancedTriangle: return "balanced";
    case GeneratorKind::NeutralPair: return "pair";
    case GeneratorKind::NeutralClover: return "clover";
  }
  throw internal_error("bad GeneratorKind value");
}

const char* generator_pattern_name(GeneratorPattern p) {
  switch (p) {
    case GeneratorPattern::Cyclic: return "cyclic";
    case GeneratorPattern::Balanced: return "balanced";
    case GeneratorPattern::PairCompetitive: return "pair-competitive";
    case GeneratorPattern::PairCollaborativeWon: return "pair-collaborative-won";
    case GeneratorPattern::PairCollaborativeLost: return "pair-collaborative-lost";
    case GeneratorPattern::CloverAtNetWinner: return "clover-at-net-winner";
    case GeneratorPattern::CloverAtNetLoser: return "clover-at-net-loser";
  }
  throw internal_error("bad GeneratorPattern value");
}

std::vector<GeneratorCopy> find_generators(const Tournament& t) {
  const RootSystem& sys = t.system;
  const int n = sys.rank;
  std::vector<GeneratorCopy> out;

  auto try_copy = [&](GeneratorKind kind, GeneratorPattern pattern,
                      std::vector<SignedEdge> support, int weight) {
    if (is_neutral_subset(t, support))
      out.push_back({kind, pattern, std::move(support), weight});
  };

  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) {
        const auto nij = SignedEdge::negative(i, j);
        const auto nik = SignedEdge::negative(i, k);
        const auto njk = SignedEdge::negative(j, k);
        try_copy(GeneratorKind::CyclicTriangle, GeneratorPattern::Cyclic, {nij, nik, njk}, 1);
        if (sys.has_positive_edges()) {
          const auto pij = SignedEdge::positive(i, j);
          const auto pik = SignedEdge::positive(i, k);
          const auto pjk = SignedEdge::positive(j, k);
          // one balanced triangle per placement of the competitive edge
          try_copy(GeneratorKind::BalancedTriangle, GeneratorPattern::Balanced, {nij, pik, pjk}, 1);
          try_copy(GeneratorKind::BalancedTriangle, GeneratorPattern::Balanced, {nik, pij, pjk}, 1);
          try_copy(GeneratorKind::BalancedTriangle, GeneratorPattern::Balanced, {njk, pij, pik}, 1);
        }
      }

  if (sys.has_half_edges()) {
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j) {
        const auto hi = SignedEdge::half(i);
        const auto hj = SignedEdge::half(j);
        try_copy(GeneratorKind::NeutralPair, GeneratorPattern::PairCompetitive,
                 {SignedEdge::negative(i, j), hi, hj}, 1);
        const auto pij = SignedEdge::positive(i, j);
        if (is_neutral_subset(t, {pij, hi, hj})) {
          out.push_back({GeneratorKind::NeutralPair,
                         t.win(pij) ? GeneratorPattern::PairCollaborativeWon
                                    : GeneratorPattern::PairCollaborativeLost,
                         {pij, hi, hj},
                         1});
        }
      }
  }

  if (sys.has_loops()) {
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j) {
        const auto nij = SignedEdge::negative(i, j);
        const auto pij = SignedEdge::positive(i, j);
        for (int at : {i, j}) {
          const int other = (at == i) ? j : i;
          std::vector<SignedEdge> support = {nij, pij, SignedEdge::loop(at)};
          if (is_neutral_subset(t, support)) {
            out.push_back({GeneratorKind::NeutralClover,
                           wins_competitive(t, at, other)
                               ? GeneratorPattern::CloverAtNetWinner
                               : GeneratorPattern::CloverAtNetLoser,
                           std::move(support),
                           2});
          }
        }
      }
  }

  return out;
}

GeneratorCounts generator_counts(const Tournament& t) {
  const RootSystem& sys = t.system;
  const int n = sys.rank;
  const std::vector<std::uint8_t>& bits = t.outcomes;
  GeneratorCounts c;

  auto neg = [&](int i, int j) { return bits[edge_index(sys, SignedEdge::negative(i, j))]; };
  auto pos = [&](int i, int j) { return bits[edge_index(sys, SignedEdge::positive(i, j))]; };
  auto sol = [&](int i) {
    return bits[2 * sys.pair_count() + (i - 1)];
  };

  // Zero-sum bit conditions, read off the oriented-root algebra: a triple of
  // edges (a,b,c) whose roots satisfy r_a - r_b + r_c = 0 is neutral iff
  // bit(a) == bit(c) != bit(b).
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) {
        const auto bnij = neg(i, j), bnik = neg(i, k), bnjk = neg(j, k);
        if (bnij == bnjk && bnij != bnik) ++c.cyclic;
        if (sys.has_positive_edges()) {
          const auto bpij = pos(i, j), bpik = pos(i, k), bpjk = pos(j, k);
          if (bnij == bpjk && bnij != bpik) ++c.balanced;
          if (bnik == bpjk && bnik != bpij) ++c.balanced;
          if (bnjk == bpik && bnjk != bpij) ++c.balanced;
        }
      }

  if (sys.has_half_edges()) {
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j) {
        const auto bn = neg(i, j), bp = pos(i, j), bhi = sol(i), bhj = sol(j);
        if (bn == bhj && bn != bhi) ++c.pairs;           // competitive pattern
        if (bhi == bhj && bhi != bp) ++c.pairs;          // collaborative patterns
      }
  }

  if (sys.has_loops()) {
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j) {
        const auto bn = neg(i, j), bp = pos(i, j);
        if (bn == bp && sol(i) != bn) ++c.clovers;   // clover at i
        if (bn != bp && sol(j) == bn) ++c.clovers;   // clover at j
      }
  }

  return c;
}

long long degree(const RootSystem& sys, const ScoreVector& s) {
  const ScoreCondition cond = classify_score_sequence(sys, s);
  if (cond != ScoreCondition::Valid)
    throw std::invalid_argument("degree: not a score sequence of " + sys.name() + ": " +
                                condition_name(cond));
  const long long diff = standard_score(sys).norm_sq_doubled() - s.norm_sq_doubled();
  if (diff < 0 || diff % 8 != 0)
    throw internal_error("degree: (||s_Phi||^2 - ||s||^2)/2 = " + std::to_string(diff) +
                         "/8 is not a non-negative integer");
  return diff / 8;
}

std::vector<InterchangeNeighbor> interchange_neighbors(const Tournament& t) {
  std::vector<InterchangeNeighbor> out;
  for (const auto& copy : find_generators(t))
    out.push_back({reverse(t, copy.support), copy.weight, copy.kind});
  return out;
}

}  // namespace coxtour
