#include "coxtour/tournament.hpp"

#include <algorithm>

namespace coxtour {

Tournament::Tournament(RootSystem sys)
    : system(sys), outcomes(static_cast<std::size_t>(sys.edge_count()), 0) {}

Tournament::Tournament(RootSystem sys, std::vector<std::uint8_t> bits)
    : system(sys), outcomes(std::move(bits)) {
  if (static_cast<int>(outcomes.size()) != system.edge_count())
    throw std::invalid_argument("outcome count " + std::to_string(outcomes.size()) +
                                " does not match |Phi^+| = " +
                                std::to_string(system.edge_count()) + " of " + system.name());
  for (auto b : outcomes)
    if (b > 1) throw std::invalid_argument("outcomes must be 0 or 1");
}

Tournament Tournament::all_wins(const RootSystem& sys) {
  Tournament t(sys);
  std::fill(t.outcomes.begin(), t.outcomes.end(), std::uint8_t{1});
  return t;
}

Tournament Tournament::all_losses(const RootSystem& sys) { return Tournament(sys); }

Tournament Tournament::from_bits_string(const RootSystem& sys, const std::string& bits) {
  if (static_cast<int>(bits.size()) != sys.edge_count())
    throw std::invalid_argument("bit string length " + std::to_string(bits.size()) +
                                " does not match |Phi^+| = " +
                                std::to_string(sys.edge_count()) + " of " + sys.name());
  Tournament t(sys);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      t.outcomes[k] = 1;
    else if (bits[k] != '0')
      throw std::invalid_argument("bit string must contain only 0 and 1");
  }
  return t;
}

Tournament Tournament::from_code(const RootSystem& sys, std::uint64_t code) {
  const int m = sys.edge_count();
  if (m > 63) throw std::invalid_argument("code form requires at most 63 edges");
  if (code >> m) throw std::invalid_argument("code out of range for " + sys.name());
  Tournament t(sys);
  for (int k = 0; k < m; ++k) t.outcomes[k] = (code >> (m - 1 - k)) & 1u;
  return t;
}

std::string Tournament::bits_string() const {
  std::string out(outcomes.size(), '0');
  for (std::size_t k = 0; k < outcomes.size(); ++k)
    if (outcomes[k]) out[k] = '1';
  return out;
}

std::uint64_t Tournament::code() const {
  const int m = static_cast<int>(outcomes.size());
  if (m > 63) throw std::invalid_argument("code form requires at most 63 edges");
  std::uint64_t code = 0;
  for (int k = 0; k < m; ++k)
    if (outcomes[k]) code |= std::uint64_t{1} << (m - 1 - k);
  return code;
}

bool Tournament::win(const SignedEdge& e) const {
  return outcomes[edge_index(system, e)] != 0;
}

ScoreVector score(const Tournament& t) {
  std::vector<int> acc(t.system.rank, 0);
  const auto roots = positive_roots(t.system);
  for (std::size_t k = 0; k < roots.size(); ++k)
    roots[k].add_root(acc, t.outcomes[k] ? 1 : -1);
  return ScoreVector(std::move(acc));
}

ScoreVector standard_score(const RootSystem& sys) {
  std::vector<int> acc(sys.rank, 0);
  for (const auto& e : positive_roots(sys)) e.add_root(acc, 1);
  return ScoreVector(std::move(acc));
}

Tournament reverse(const Tournament& t, const std::vector<SignedEdge>& edges) {
  Tournament out = t;
  std::vector<std::uint8_t> seen(t.outcomes.size(), 0);
  for (const auto& e : edges) {
    const int idx = edge_index(t.system, e);
    if (seen[idx])
      throw std::invalid_argument("duplicate edge " + e.to_string() + " in reversal set");
    seen[idx] = 1;
    out.outcomes[idx] ^= 1;
  }
  return out;
}

bool is_neutral_subset(const Tournament& t, const std::vector<SignedEdge>& edges) {
  std::vector<int> acc(t.system.rank, 0);
  for (const auto& e : edges) {
    const int idx = edge_index(t.system, e);
    e.add_root(acc, t.outcomes[idx] ? 1 : -1);
  }
  return std::all_of(acc.begin(), acc.end(), [](int v) { return v == 0; });
}

bool wins_competitive(const Tournament& t, int i, int j) {
  if (i == j) throw std::invalid_argument("competitive game needs two players");
  if (i > j) return t.win(SignedEdge::negative(i, j));
  return !t.win(SignedEdge::negative(j, i));
}

bool collaborative_won(const Tournament& t, int i, int j) {
  if (i == j) throw std::invalid_argument("collaborative game needs two players");
  return t.win(i > j ? SignedEdge::positive(i, j) : SignedEdge::positive(j, i));
}

bool solitaire_won(const Tournament& t, int i) {
  if (t.system.has_half_edges()) return t.win(SignedEdge::half(i));
  if (t.system.has_loops()) return t.win(SignedEdge::loop(i));
  throw std::invalid_argument(t.system.name() + " has no solitaire games");
}

std::vector<int> win_vector(const Tournament& t) {
  if (t.system.family != Family::A)
    throw std::invalid_argument("win vectors are defined for family A only");
  std::vector<int> wins(t.system.rank, 0);
  const auto roots = positive_roots(t.system);
  for (std::size_t k = 0; k < roots.size(); ++k)
    ++wins[(t.outcomes[k] ? roots[k].i : roots[k].j) - 1];
  return wins;
}

}  // namespace coxtour
