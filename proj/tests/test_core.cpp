#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "coxtour/oracle.hpp"
#include "coxtour/score_vector.hpp"
#include "coxtour/signed_permutation.hpp"
#include "coxtour/tournament.hpp"

using namespace coxtour;

namespace {

std::vector<SignedPermutation> weyl_group(const RootSystem& sys) {
  const int n = sys.rank;
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  std::vector<SignedPermutation> out;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<int> img(perm);
      for (int k = 0; k < n; ++k)
        if (signs & (1 << k)) img[k] = -img[k];
      SignedPermutation phi(img);
      if (phi.in_weyl_group(sys.family)) out.push_back(std::move(phi));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("root system shape and canonical edge order") {
  const auto d3 = positive_roots({Family::D, 3});
  REQUIRE(d3.size() == 6);
  CHECK(d3[0] == SignedEdge::negative(2, 1));
  CHECK(d3[1] == SignedEdge::positive(2, 1));
  CHECK(d3[2] == SignedEdge::negative(3, 1));
  CHECK(d3[3] == SignedEdge::positive(3, 1));
  CHECK(d3[4] == SignedEdge::negative(3, 2));
  CHECK(d3[5] == SignedEdge::positive(3, 2));

  const auto b2 = positive_roots({Family::B, 2});
  REQUIRE(b2.size() == 4);
  CHECK(b2[0] == SignedEdge::negative(2, 1));
  CHECK(b2[1] == SignedEdge::positive(2, 1));
  CHECK(b2[2] == SignedEdge::half(1));
  CHECK(b2[3] == SignedEdge::half(2));

  const auto a3 = positive_roots({Family::A, 3});
  REQUIRE(a3.size() == 3);
  CHECK(a3[0] == SignedEdge::negative(2, 1));
  CHECK(a3[1] == SignedEdge::negative(3, 1));
  CHECK(a3[2] == SignedEdge::negative(3, 2));

  // |Phi^+| per family
  CHECK(RootSystem(Family::A, 5).edge_count() == 10);
  CHECK(RootSystem(Family::B, 5).edge_count() == 25);
  CHECK(RootSystem(Family::C, 5).edge_count() == 25);
  CHECK(RootSystem(Family::D, 5).edge_count() == 20);

  // edge_index agrees with the canonical list
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem sys(f, 4);
    const auto roots = positive_roots(sys);
    for (std::size_t k = 0; k < roots.size(); ++k)
      CHECK(edge_index(sys, roots[k]) == static_cast<int>(k));
  }

  CHECK_THROWS_AS(RootSystem(Family::D, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(edge_index({Family::D, 3}, SignedEdge::half(1)), std::invalid_argument);
  CHECK_THROWS_AS(edge_index({Family::B, 3}, SignedEdge::loop(1)), std::invalid_argument);
  CHECK_THROWS_AS(edge_index({Family::A, 3}, SignedEdge::positive(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(edge_index({Family::D, 3}, SignedEdge::negative(1, 2)), std::invalid_argument);
}

TEST_CASE("score entry strings") {
  const ScoreVector s{{6, 3, -1, 0}};
  CHECK(s.to_strings() == std::vector<std::string>{"3", "3/2", "-1/2", "0"});
  CHECK(parse_half_string("3") == 6);
  CHECK(parse_half_string("-2") == -4);
  CHECK(parse_half_string("1/2") == 1);
  CHECK(parse_half_string("-3/2") == -3);
  CHECK_THROWS_AS(parse_half_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_half_string("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_half_string(""), std::invalid_argument);
}

TEST_CASE("standard scores") {
  CHECK(standard_score({Family::C, 3}) == ScoreVector::from_ints({1, 2, 3}));
  CHECK(standard_score({Family::D, 3}) == ScoreVector::from_ints({0, 1, 2}));
  CHECK(standard_score({Family::B, 2}) == ScoreVector{{1, 3}});

  // s_Phi = (0,1,...,n-1) + delta * 1 with delta = 1/2, 1, 0 for B, C, D
  for (int n = 1; n <= 6; ++n) {
    const ScoreVector b = standard_score({Family::B, n});
    const ScoreVector c = standard_score({Family::C, n});
    for (int i = 0; i < n; ++i) {
      CHECK(b.doubled[i] == 2 * i + 1);
      CHECK(c.doubled[i] == 2 * i + 2);
    }
    if (n >= 2) {
      const ScoreVector d = standard_score({Family::D, n});
      for (int i = 0; i < n; ++i) CHECK(d.doubled[i] == 2 * i);
    }
    const ScoreVector a = standard_score({Family::A, n});
    for (int i = 0; i < n; ++i) CHECK(a.doubled[i] == 2 * i - (n - 1));
  }

  // standard score is the score of the all-wins tournament
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem sys(f, 4);
    CHECK(score(Tournament::all_wins(sys)) == standard_score(sys));
  }
}

TEST_CASE("scores of specific tournaments") {
  const RootSystem c3(Family::C, 3);
  CHECK(score(Tournament::all_wins(c3)) == ScoreVector::from_ints({1, 2, 3}));
  CHECK(score(Tournament::all_losses(c3)) == ScoreVector::from_ints({-1, -2, -3}));

  // cyclic competitive games (2 beats 1, 3 beats 2, 1 beats 3), collaborative all won
  const Tournament cyc = Tournament::from_bits_string({Family::D, 3}, "110111");
  CHECK(score(cyc) == ScoreVector::from_ints({1, 1, 1}));
}

TEST_CASE("bitstring round trip and code order") {
  const RootSystem b3(Family::B, 3);
  const Tournament t = Tournament::from_bits_string(b3, "101010011");
  CHECK(t.bits_string() == "101010011");
  CHECK(Tournament::from_code(b3, t.code()) == t);

  // increasing codes give lexicographically increasing bitstrings
  std::string prev;
  for (std::uint64_t code = 0; code < 16; ++code) {
    const std::string bits = Tournament::from_code({Family::B, 2}, code).bits_string();
    if (code > 0) CHECK(prev < bits);
    prev = bits;
  }

  CHECK_THROWS_AS(Tournament::from_bits_string(b3, "000"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::from_bits_string(b3, "00000000x"), std::invalid_argument);
}

TEST_CASE("score parity classes, exhaustively for n <= 3") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = (f == Family::D ? 2 : 1); n <= 3; ++n) {
      const RootSystem sys(f, n);
      oracle::for_each_tournament(sys, [&](const Tournament& t) {
        const ScoreVector s = score(t);
        for (int d : s.doubled) {
          switch (f) {
            case Family::B: CHECK((d & 1) == 1); break;
            case Family::C:
            case Family::D: CHECK((d & 1) == 0); break;
            case Family::A: CHECK((d & 1) == ((n - 1) & 1)); break;
          }
        }
      });
    }
  }
}

TEST_CASE("sum congruence matches the standard score, C and D, n <= 4") {
  for (Family f : {Family::C, Family::D}) {
    for (int n = 2; n <= 4; ++n) {
      const RootSystem sys(f, n);
      const long long want = standard_score(sys).sum_doubled() / 2;
      oracle::for_each_tournament(sys, [&](const Tournament& t) {
        CHECK(((score(t).sum_doubled() / 2 - want) & 1LL) == 0);
      });
    }
  }
}

TEST_CASE("reverse: involution, full reversal, delta identity") {
  const RootSystem b2(Family::B, 2);
  const Tournament t = Tournament::from_bits_string(b2, "1010");

  CHECK(reverse(t, {}) == t);

  const auto all = positive_roots(b2);
  const Tournament flipped = reverse(t, all);
  ScoreVector neg = score(t);
  for (int& d : neg.doubled) d = -d;
  CHECK(score(flipped) == neg);
  CHECK(reverse(flipped, all) == t);

  CHECK_THROWS_AS(reverse(t, {SignedEdge::loop(1)}), std::invalid_argument);
  CHECK_THROWS_AS(reverse(t, {SignedEdge::half(1), SignedEdge::half(1)}),
                  std::invalid_argument);

  // score(reverse(t,X)) = score(t) - sum of oriented roots over X
  std::mt19937_64 rng(7);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem sys(f, 4);
    const auto roots = positive_roots(sys);
    for (int round = 0; round < 250; ++round) {
      Tournament u(sys);
      for (auto& b : u.outcomes) b = rng() & 1;
      std::vector<SignedEdge> subset;
      for (const auto& e : roots)
        if (rng() & 1) subset.push_back(e);
      std::vector<int> delta(sys.rank, 0);
      for (const auto& e : subset) e.add_root(delta, u.win(e) ? 1 : -1);
      const ScoreVector after = score(reverse(u, subset));
      for (int k = 0; k < sys.rank; ++k)
        CHECK(after.doubled[k] == score(u).doubled[k] - 2 * delta[k]);
    }
  }
}

TEST_CASE("neutral subsets") {
  const Tournament cyc = Tournament::from_bits_string({Family::D, 3}, "110111");
  CHECK(is_neutral_subset(cyc, {SignedEdge::negative(2, 1), SignedEdge::negative(3, 1),
                                SignedEdge::negative(3, 2)}));

  const RootSystem b2(Family::B, 2);
  for (std::uint64_t code = 0; code < 16; ++code) {
    const Tournament t = Tournament::from_code(b2, code);
    CHECK_FALSE(is_neutral_subset(t, {SignedEdge::half(1)}));
  }

  // {neg, pos} on one pair is never neutral, any orientation
  const RootSystem d2(Family::D, 2);
  for (std::uint64_t code = 0; code < 4; ++code) {
    const Tournament t = Tournament::from_code(d2, code);
    CHECK_FALSE(
        is_neutral_subset(t, {SignedEdge::negative(2, 1), SignedEdge::positive(2, 1)}));
  }
}

TEST_CASE("signed permutations act compatibly with scores") {
  const RootSystem c3(Family::C, 3);
  const Tournament wins = Tournament::all_wins(c3);

  CHECK(apply_signed_permutation(wins, SignedPermutation::identity(3)) == wins);

  const SignedPermutation swap12({2, 1, 3});
  CHECK(score(apply_signed_permutation(wins, swap12)) == ScoreVector::from_ints({2, 1, 3}));

  const SignedPermutation flip1({-1, 2});
  const Tournament b2wins = Tournament::all_wins({Family::B, 2});
  CHECK(score(apply_signed_permutation(b2wins, flip1)) == ScoreVector{{-1, 3}});

  CHECK_THROWS_AS(apply_signed_permutation(Tournament::all_wins({Family::A, 3}),
                                           SignedPermutation({-1, 2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_signed_permutation(Tournament::all_wins({Family::D, 3}),
                                           SignedPermutation({-1, 2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({1, 1}), std::invalid_argument);
}

TEST_CASE("score(phi . t) == phi . score(t) over the whole Weyl group, n <= 3") {
  std::mt19937_64 rng(11);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = (f == Family::D ? 2 : 1); n <= 3; ++n) {
      const RootSystem sys(f, n);
      const auto group = weyl_group(sys);
      // group orders: n! (A), 2^n n! (B/C), 2^{n-1} n! (D)
      std::size_t expect = 1;
      for (int k = 2; k <= n; ++k) expect *= k;
      if (f == Family::B || f == Family::C) expect <<= n;
      if (f == Family::D) expect <<= (n - 1);
      CHECK(group.size() == expect);

      for (int round = 0; round < 20; ++round) {
        Tournament t(sys);
        for (auto& b : t.outcomes) b = rng() & 1;
        const ScoreVector s = score(t);
        for (const auto& phi : group)
          CHECK(score(apply_signed_permutation(t, phi)) == apply(phi, s));
      }
    }
  }
}

TEST_CASE("permutation inverse round trip") {
  const SignedPermutation phi({-3, 1, -2});
  const SignedPermutation inv = phi.inverse();
  const Tournament t = Tournament::from_bits_string({Family::B, 3}, "011010110");
  CHECK(apply_signed_permutation(apply_signed_permutation(t, phi), inv) == t);
}
