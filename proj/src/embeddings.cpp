#include "coxtour/embeddings.hpp"

#include <algorithm>

namespace coxtour {

long long theta_eighths(const RootSystem& sys) {
  // theta = ||s_Phi||^2 / 2 = ||2 s_Phi||^2 / 8
  return standard_score(sys).norm_sq_doubled();
}

namespace {

// Scratch for assembling a classical host tournament from game assignments.
struct HostBuilder {
  int players;
  std::vector<std::uint8_t> beats;  // row-major, beats[a*players + b] = 1 iff a -> b
  std::vector<std::uint8_t> seen;

  explicit HostBuilder(int n) : players(n), beats(n * n, 0), seen(n * n, 0) {}

  void game(int winner, int loser) {
    const int a = winner - 1, b = loser - 1;
    if (seen[a * players + b])
      throw internal_error("embedding assigned a host game twice");
    seen[a * players + b] = seen[b * players + a] = 1;
    beats[a * players + b] = 1;
  }

  Tournament finish() const {
    const RootSystem host_sys(Family::A, players);
    Tournament host(host_sys);
    for (int i = 2; i <= players; ++i)
      for (int j = 1; j < i; ++j) {
        if (!seen[(i - 1) * players + (j - 1)])
          throw internal_error("embedding left a host game unassigned");
        host.outcomes[edge_index(host_sys, SignedEdge::negative(i, j))] =
            beats[(i - 1) * players + (j - 1)];
      }
    return host;
  }
};

// Pair games map identically in all three embeddings: a competitive result
// repeats on the top layer with roles reversed, a collaborative result sends
// each player over (or under) the other's mirror.
void embed_pairs(const Tournament& t, HostBuilder& hb) {
  const int n = t.system.rank;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      const int mi = n + i, mj = n + j;  // host labels of -i, -j
      if (wins_competitive(t, i, j)) {
        hb.game(i, j);
        hb.game(mj, mi);
      } else {
        hb.game(j, i);
        hb.game(mi, mj);
      }
      if (collaborative_won(t, i, j)) {
        hb.game(i, mj);
        hb.game(j, mi);
      } else {
        hb.game(mj, i);
        hb.game(mi, j);
      }
    }
}

std::vector<int> make_player_map(int n, bool extra) {
  std::vector<int> map;
  map.reserve(2 * n + (extra ? 1 : 0));
  for (int i = 1; i <= n; ++i) map.push_back(i);
  for (int i = 1; i <= n; ++i) map.push_back(-i);
  if (extra) map.push_back(0);
  return map;
}

}  // namespace

EmbeddedTournament embed_B(const Tournament& t) {
  if (t.system.family != Family::B)
    throw std::invalid_argument("embed_B expects a B tournament");
  const int n = t.system.rank;
  HostBuilder hb(2 * n);
  embed_pairs(t, hb);
  for (int i = 1; i <= n; ++i) {
    if (solitaire_won(t, i))
      hb.game(i, n + i);
    else
      hb.game(n + i, i);
  }
  return {hb.finish(), make_player_map(n, false)};
}

EmbeddedTournament embed_D(const Tournament& t) {
  if (t.system.family != Family::D)
    throw std::invalid_argument("embed_D expects a D tournament");
  const int n = t.system.rank;
  const int extra = 2 * n + 1;
  HostBuilder hb(extra);
  embed_pairs(t, hb);
  for (int i = 1; i <= n; ++i) {
    // score-neutral cyclic triangle i -> -i -> extra -> i
    hb.game(i, n + i);
    hb.game(n + i, extra);
    hb.game(extra, i);
  }
  return {hb.finish(), make_player_map(n, true)};
}

EmbeddedTournament embed_C(const Tournament& t) {
  if (t.system.family != Family::C)
    throw std::invalid_argument("embed_C expects a C tournament");
  const int n = t.system.rank;
  const int extra = 2 * n + 1;
  HostBuilder hb(extra);
  embed_pairs(t, hb);
  for (int i = 1; i <= n; ++i) {
    if (solitaire_won(t, i)) {
      hb.game(i, n + i);
      hb.game(i, extra);
      hb.game(extra, n + i);
    } else {
      hb.game(n + i, i);
      hb.game(extra, i);
      hb.game(n + i, extra);
    }
  }
  return {hb.finish(), make_player_map(n, true)};
}

EmbeddedTournament embed(const Tournament& t) {
  switch (t.system.family) {
    case Family::B: return embed_B(t);
    case Family::C: return embed_C(t);
    case Family::D: return embed_D(t);
    case Family::A:
      throw std::invalid_argument("family A tournaments are already classical");
  }
  throw internal_error("bad Family value");
}

}  // namespace coxtour
