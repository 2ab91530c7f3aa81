#include "coxtour/types.hpp"

namespace coxtour {

Family family_from_string(const std::string& name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "B" || name == "b") return Family::B;
  if (name == "C" || name == "c") return Family::C;
  if (name == "D" || name == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + name + "' (expected A, B, C or D)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  throw internal_error("bad Family value");
}

RootSystem::RootSystem(Family f, int n) : family(f), rank(n) {
  const int min_rank = (f == Family::D) ? 2 : 1;
  if (n < min_rank) {
    throw std::invalid_argument(std::string(family_name(f)) + " requires rank >= " +
                                std::to_string(min_rank) + ", got " + std::to_string(n));
  }
}

int RootSystem::edge_count() const {
  const int pairs = pair_count();
  switch (family) {
    case Family::A: return pairs;
    case Family::D: return 2 * pairs;
    case Family::B:
    case Family::C: return 2 * pairs + rank;
  }
  throw internal_error("bad Family value");
}

std::string RootSystem::name() const {
  return std::string(family_name(family)) + "_" + std::to_string(rank);
}

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Negative: return "neg";
    case EdgeKind::Positive: return "pos";
    case EdgeKind::Half: return "half";
    case EdgeKind::Loop: return "loop";
  }
  throw internal_error("bad EdgeKind value");
}

std::vector<int> SignedEdge::root_vector(int n) const {
  std::vector<int> v(n, 0);
  add_root(v, 1);
  return v;
}

void SignedEdge::add_root(std::vector<int>& acc, int sign) const {
  switch (kind) {
    case EdgeKind::Negative:
      acc[i - 1] += sign;
      acc[j - 1] -= sign;
      break;
    case EdgeKind::Positive:
      acc[i - 1] += sign;
      acc[j - 1] += sign;
      break;
    case EdgeKind::Half:
      acc[i - 1] += sign;
      break;
    case EdgeKind::Loop:
      acc[i - 1] += 2 * sign;
      break;
  }
}

std::string SignedEdge::to_string() const {
  std::string out = edge_kind_name(kind);
  out += "(" + std::to_string(i);
  if (kind == EdgeKind::Negative || kind == EdgeKind::Positive)
    out += "," + std::to_string(j);
  out += ")";
  return out;
}

std::vector<SignedEdge> positive_roots(const RootSystem& sys) {
  std::vector<SignedEdge> out;
  out.reserve(sys.edge_count());
  for (int i = 2; i <= sys.rank; ++i) {
    for (int j = 1; j < i; ++j) {
      out.push_back(SignedEdge::negative(i, j));
      if (sys.has_positive_edges()) out.push_back(SignedEdge::positive(i, j));
    }
  }
  if (sys.has_half_edges())
    for (int i = 1; i <= sys.rank; ++i) out.push_back(SignedEdge::half(i));
  if (sys.has_loops())
    for (int i = 1; i <= sys.rank; ++i) out.push_back(SignedEdge::loop(i));
  return out;
}

namespace {

// Rank of the pair (i,j), i > j, in the order (2,1),(3,1),(3,2),(4,1),...
inline int pair_rank(int i, int j) { return (i - 1) * (i - 2) / 2 + (j - 1); }

[[noreturn]] void bad_edge(const RootSystem& sys, const SignedEdge& e) {
  throw std::invalid_argument(e.to_string() + " is not a positive root of " + sys.name());
}

}  // namespace

int edge_index(const RootSystem& sys, const SignedEdge& e) {
  const int n = sys.rank;
  switch (e.kind) {
    case EdgeKind::Negative:
    case EdgeKind::Positive: {
      if (e.i <= e.j || e.j < 1 || e.i > n) bad_edge(sys, e);
      if (e.kind == EdgeKind::Positive && !sys.has_positive_edges()) bad_edge(sys, e);
      const int r = pair_rank(e.i, e.j);
      if (sys.family == Family::A) return r;
      return 2 * r + (e.kind == EdgeKind::Positive ? 1 : 0);
    }
    case EdgeKind::Half:
      if (!sys.has_half_edges() || e.i < 1 || e.i > n) bad_edge(sys, e);
      return 2 * sys.pair_count() + (e.i - 1);
    case EdgeKind::Loop:
      if (!sys.has_loops() || e.i < 1 || e.i > n) bad_edge(sys, e);
      return 2 * sys.pair_count() + (e.i - 1);
  }
  throw internal_error("bad EdgeKind value");
}

}  // namespace coxtour
