#include "coxtour/json_io.hpp"

#include <sstream>

namespace coxtour {

json tournament_to_json(const Tournament& t) {
  json j;
  j["family"] = family_name(t.system.family);
  j["n"] = t.system.rank;
  j["bits"] = t.bits_string();
  return j;
}

namespace {

EdgeKind edge_kind_from_string(const std::string& s) {
  if (s == "neg") return EdgeKind::Negative;
  if (s == "pos") return EdgeKind::Positive;
  if (s == "half") return EdgeKind::Half;
  if (s == "loop") return EdgeKind::Loop;
  throw std::invalid_argument("unknown edge kind '" + s + "'");
}

}  // namespace

Tournament tournament_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n"))
    throw std::invalid_argument("tournament JSON needs \"family\" and \"n\"");
  const RootSystem sys(family_from_string(j.at("family").get<std::string>()),
                       j.at("n").get<int>());

  if (j.contains("bits"))
    return Tournament::from_bits_string(sys, j.at("bits").get<std::string>());

  if (!j.contains("edges"))
    throw std::invalid_argument("tournament JSON needs \"bits\" or \"edges\"");
  Tournament t(sys);
  std::vector<std::uint8_t> seen(t.outcomes.size(), 0);
  for (const auto& entry : j.at("edges")) {
    const EdgeKind kind = edge_kind_from_string(entry.at("kind").get<std::string>());
    SignedEdge e{kind, entry.at("i").get<int>(),
                 (kind == EdgeKind::Negative || kind == EdgeKind::Positive)
                     ? entry.at("j").get<int>()
                     : 0};
    const int idx = edge_index(sys, e);
    if (seen[idx]) throw std::invalid_argument("edge " + e.to_string() + " listed twice");
    seen[idx] = 1;
    t.outcomes[idx] = entry.at("win").get<bool>() ? 1 : 0;
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k])
      throw std::invalid_argument("expanded tournament JSON must list every edge of " +
                                  sys.name());
  return t;
}

json score_to_json(const ScoreVector& s) {
  json arr = json::array();
  for (const auto& e : s.to_strings()) arr.push_back(e);
  return arr;
}

ScoreVector score_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("score JSON must be an array of strings");
  std::vector<std::string> entries;
  for (const auto& e : j) entries.push_back(e.get<std::string>());
  return ScoreVector::from_halves(entries);
}

json trace_to_json(const ConstructionTrace& trace) {
  json arr = json::array();
  for (const auto& stage : trace.stages) {
    json s;
    s["stage"] = stage.name;
    if (stage.tournament) {
      s["tournament"] = tournament_to_json(*stage.tournament);
    } else {
      json vec = json::array();
      for (int v : stage.vec) vec.push_back(std::to_string(v));
      s["vector"] = vec;
    }
    arr.push_back(std::move(s));
  }
  return arr;
}

json counts_to_json(const GeneratorCounts& c) {
  json j;
  j["cyclic"] = c.cyclic;
  j["balanced"] = c.balanced;
  j["pairs"] = c.pairs;
  j["clovers"] = c.clovers;
  j["weightedTotal"] = c.weighted_total();
  return j;
}

json graph_to_json(const InterchangeGraph& g) {
  json j;
  j["family"] = family_name(g.system.family);
  j["n"] = g.system.rank;
  j["score"] = score_to_json(g.fiber_score);
  j["degree"] = g.expected_degree;
  json verts = json::array();
  for (const auto& t : g.vertices) verts.push_back(t.bits_string());
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : g.edges) {
    json ej;
    ej["u"] = e.u;
    ej["v"] = e.v;
    ej["multiplicity"] = e.multiplicity;
    ej["kind"] = generator_kind_name(e.kind);
    edges.push_back(std::move(ej));
  }
  j["edges"] = edges;
  j["regular"] = is_regular(g);
  j["connected"] = is_connected(g);
  return j;
}

std::string graph_to_dot(const InterchangeGraph& g) {
  std::ostringstream out;
  out << "graph \"" << g.system.name() << " " << g.fiber_score.to_string() << "\" {\n";
  out << "  node [shape=box fontname=monospace];\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    out << "  v" << k << " [label=\"" << g.vertices[k].bits_string() << "\"];\n";
  for (const auto& e : g.edges)
    for (int rep = 0; rep < e.multiplicity; ++rep)
      out << "  v" << e.u << " -- v" << e.v << ";\n";
  out << "}\n";
  return out.str();
}

json embedding_to_json(const EmbeddedTournament& e) {
  json j;
  j["host"] = tournament_to_json(e.host);
  json map = json::array();
  for (int label : e.player_map) map.push_back(label);
  j["playerMap"] = map;
  return j;
}

}  // namespace coxtour
