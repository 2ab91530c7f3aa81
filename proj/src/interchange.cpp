#include "coxtour/interchange.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coxtour/oracle.hpp"
#include "coxtour/scan.hpp"
#include "coxtour/score_sequences.hpp"

namespace coxtour {

InterchangeGraph build_interchange_graph_from_codes(const RootSystem& sys,
                                                    const ScoreVector& s,
                                                    const std::vector<std::uint32_t>& codes) {
  InterchangeGraph g{sys, s, degree(sys, s), {}, {}};
  g.vertices.reserve(codes.size());
  std::unordered_map<std::uint32_t, int> index;
  index.reserve(codes.size() * 2);
  for (std::size_t k = 0; k < codes.size(); ++k) {
    g.vertices.push_back(Tournament::from_code(sys, codes[k]));
    index.emplace(codes[k], static_cast<int>(k));
  }

  for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
    const Tournament& t = g.vertices[u];
    for (const auto& copy : find_generators(t)) {
      const Tournament neighbor = reverse(t, copy.support);
      const auto it = index.find(static_cast<std::uint32_t>(neighbor.code()));
      if (it == index.end())
        throw internal_error("interchange move left the fiber");
      const int v = it->second;
      if (v == u) throw internal_error("interchange move produced a self-loop");
      if (u < v) g.edges.push_back({u, v, copy.weight, copy.kind});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const InterchangeEdge& a, const InterchangeEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return g;
}

InterchangeGraph build_interchange_graph(const RootSystem& sys, const ScoreVector& s,
                                         bool force) {
  if (!is_score_sequence(sys, s))
    throw std::invalid_argument("build_interchange_graph: " + s.to_string() +
                                " is not a score sequence of " + sys.name());
  oracle::check_enumeration_guard(sys, force);
  return build_interchange_graph_from_codes(
      sys, s, scan::fiber_codes(sys, scan::score_key(s), {true, force}));
}

bool is_connected(const InterchangeGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (n <= 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int components = n;
  for (const auto& e : g.edges) {
    const int ra = find(e.u), rb = find(e.v);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

bool is_regular(const InterchangeGraph& g) {
  std::vector<long long> weighted(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    weighted[e.u] += e.multiplicity;
    weighted[e.v] += e.multiplicity;
  }
  return std::all_of(weighted.begin(), weighted.end(),
                     [&](long long w) { return w == g.expected_degree; });
}

}  // namespace coxtour
