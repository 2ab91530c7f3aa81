#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxtour {

// Raised when an exhaustive operation would exceed the enumeration guard.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a theorem-backed internal invariant fails. This always means a
// bug in the library, never bad user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Family : std::uint8_t { A, B, C, D };

Family family_from_string(const std::string& name);
const char* family_name(Family f);

// One of the four infinite families of irreducible crystallographic root
// systems. For family A, `rank` counts players, so the underlying system is
// A_{rank-1}; for B/C/D it is the usual rank.
struct RootSystem {
  Family family;
  int rank;

  RootSystem(Family f, int n);

  int players() const { return rank; }
  int pair_count() const { return rank * (rank - 1) / 2; }
  bool has_positive_edges() const { return family != Family::A; }
  bool has_half_edges() const { return family == Family::B; }
  bool has_loops() const { return family == Family::C; }

  // |Phi^+|: A -> n(n-1)/2, B -> n^2, C -> n^2, D -> n(n-1).
  int edge_count() const;

  std::string name() const;

  friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

enum class EdgeKind : std::uint8_t { Negative, Positive, Half, Loop };

const char* edge_kind_name(EdgeKind k);

// A positive root, identified with a signed edge of the complete Phi-graph:
//   Negative(i,j) <-> e_i - e_j   (competitive game)
//   Positive(i,j) <-> e_i + e_j   (collaborative game)
//   Half(i)       <-> e_i         (solitaire, B only)
//   Loop(i)       <-> 2 e_i       (solitaire, C only)
// Players are 1-indexed; pair edges keep i > j.
struct SignedEdge {
  EdgeKind kind;
  int i;
  int j;  // 0 for Half/Loop

  static SignedEdge negative(int i, int j) { return {EdgeKind::Negative, i, j}; }
  static SignedEdge positive(int i, int j) { return {EdgeKind::Positive, i, j}; }
  static SignedEdge half(int i) { return {EdgeKind::Half, i, 0}; }
  static SignedEdge loop(int i) { return {EdgeKind::Loop, i, 0}; }

  std::vector<int> root_vector(int n) const;

  // Accumulates sign * (root vector) into acc; acc holds doubled scores.
  void add_root(std::vector<int>& acc, int sign) const;

  std::string to_string() const;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Positive roots in canonical edge order: for i = 2..n, j = 1..i-1 the
// Negative(i,j) then Positive(i,j) edge (Positive omitted in A), followed by
// Half(i) (B) or Loop(i) (C) for i = 1..n. This order is normative: it fixes
// the bit layout of every serialized tournament.
std::vector<SignedEdge> positive_roots(const RootSystem& sys);

// Index of `e` in canonical edge order; throws std::invalid_argument if `e`
// is not a positive root of `sys`.
int edge_index(const RootSystem& sys, const SignedEdge& e);

}  // namespace coxtour
