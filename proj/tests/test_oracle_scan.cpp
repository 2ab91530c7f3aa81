#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxtour/generators.hpp"
#include "coxtour/oracle.hpp"
#include "coxtour/scan.hpp"
#include "coxtour/score_sequences.hpp"

using namespace coxtour;

TEST_CASE("enumeration counts and order") {
  CHECK(oracle::tournament_count({Family::D, 3}) == 64);
  CHECK(oracle::tournament_count({Family::B, 2}) == 16);
  CHECK(oracle::tournament_count({Family::A, 3}) == 8);

  std::uint64_t expect = 0;
  std::set<std::string> seen;
  oracle::for_each_tournament({Family::B, 2}, [&](const Tournament& t) {
    CHECK(t.code() == expect);
    ++expect;
    seen.insert(t.bits_string());
  });
  CHECK(expect == 16);
  CHECK(seen.size() == 16);  // no duplicates
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(oracle::tournament_count({Family::D, 6}), guard_error);      // 30 bits
  CHECK_THROWS_AS(oracle::tournament_count({Family::D, 6}, true), guard_error);
  CHECK_THROWS_AS(oracle::tournament_count({Family::B, 5}), guard_error);      // 25 bits
  CHECK_NOTHROW(oracle::check_enumeration_guard({Family::B, 5}, true));
  CHECK_NOTHROW(oracle::check_enumeration_guard({Family::D, 5}));              // 20 bits
  CHECK_THROWS_AS(oracle::permutahedron_points(7), guard_error);
  CHECK_THROWS_AS(oracle::lattice_score_set({Family::B, 9}), guard_error);
}

TEST_CASE("achieved scores") {
  // A_3 has 7 distinct win vectors, hence 7 scores
  CHECK(oracle::achieved_scores({Family::A, 3}).size() == 7);

  // every achieved score passes the membership test (necessity)
  for (Family f : {Family::B, Family::C, Family::D}) {
    const RootSystem sys(f, 3);
    for (const auto& s : oracle::achieved_scores(sys)) CHECK(is_score_sequence(sys, s));
  }
}

TEST_CASE("fiber partition covers the enumeration exactly") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem sys(f, 3);
    std::uint64_t total = 0;
    bool first = true;
    scan::ScoreKey prev_key = 0;
    for (const auto& [key, codes] : scan::collect_fibers(sys)) {
      if (!first) CHECK(prev_key < key);
      prev_key = key;
      first = false;
      total += codes.size();
      for (std::size_t k = 1; k < codes.size(); ++k) CHECK(codes[k - 1] < codes[k]);
      CHECK(scan::fiber_codes(sys, key) == codes);
    }
    CHECK(total == oracle::tournament_count(sys));
  }
}

TEST_CASE("lattice score sets") {
  const auto d3 = oracle::lattice_score_set({Family::D, 3});
  const auto has = [](const std::vector<ScoreVector>& set, const ScoreVector& s) {
    return std::find(set.begin(), set.end(), s) != set.end();
  };
  CHECK(has(d3, ScoreVector::from_ints({1, 0, 0})));
  CHECK_FALSE(has(d3, ScoreVector::from_ints({0, 0, 0})));

  // B_2: exactly the 12 sign/permutation variants of (1/2,1/2), (1/2,3/2)
  const auto b2 = oracle::lattice_score_set({Family::B, 2});
  CHECK(b2.size() == 12);
  CHECK(b2 == oracle::achieved_scores({Family::B, 2}));
  CHECK(oracle::lattice_score_set({Family::C, 2}) == oracle::achieved_scores({Family::C, 2}));
}

TEST_CASE("permutahedron points") {
  CHECK(oracle::permutahedron_points(2) ==
        std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(oracle::permutahedron_points(3).size() == 7);

  // n = 4: lattice points equal achieved win vectors
  std::set<std::vector<int>> achieved;
  oracle::for_each_tournament({Family::A, 4},
                              [&](const Tournament& t) { achieved.insert(win_vector(t)); });
  const auto points = oracle::permutahedron_points(4);
  CHECK(std::vector<std::vector<int>>(achieved.begin(), achieved.end()) == points);
}

TEST_CASE("score key packing round trip") {
  const std::vector<int> doubled = {6, -4, -2, 0, 0};
  CHECK(scan::unpack_score(scan::pack_score(doubled), 5) == doubled);
  // key order is lexicographic on doubled vectors
  CHECK(scan::pack_score({0, 1}) < scan::pack_score({1, -5}));
  CHECK(scan::pack_score({0, 1}) < scan::pack_score({0, 2}));
}

TEST_CASE("parallel kernels match the serial reference") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem sys(f, f == Family::A ? 5 : 3);

    std::vector<scan::ScoreKey> reference;
    for (const auto& s : oracle::achieved_scores(sys))
      reference.push_back(scan::score_key(s));
    std::sort(reference.begin(), reference.end());

    CHECK(scan::achieved_score_keys(sys, {true, false}) == reference);
    CHECK(scan::achieved_score_keys(sys, {false, false}) == reference);

    const auto fibers_par = scan::collect_fibers(sys, {true, false});
    const auto fibers_ser = scan::collect_fibers(sys, {false, false});
    CHECK(fibers_par == fibers_ser);
  }
}

TEST_CASE("regularity kernel agrees with the per-tournament reference") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const RootSystem sys(f, f == Family::A ? 5 : 3);
    const auto report = scan::regularity_scan(sys);
    CHECK(report.ok);
    CHECK(report.tournaments == oracle::tournament_count(sys));

    // reference loop over materialized tournaments
    oracle::for_each_tournament(sys, [&](const Tournament& t) {
      CHECK(generator_counts(t).weighted_total() == degree(sys, score(t)));
    });
  }
  CHECK(scan::regularity_scan({Family::D, 4}, {true, false}).ok);
  CHECK(scan::regularity_scan({Family::D, 4}, {false, false}).ok);
}
