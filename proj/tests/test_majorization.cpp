#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "coxtour/majorization.hpp"
#include "coxtour/types.hpp"

using namespace coxtour;

using Vec = std::vector<int>;

namespace {

bool leq(const Vec& a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("weak sub-majorization") {
  CHECK(weak_submajorize({1, 0, 0}, {2, 1, 0}));
  CHECK_FALSE(weak_submajorize({3, 3, 3}, {3, 2, 1}));
  CHECK(weak_submajorize({4, -1, 2}, {4, -1, 2}));  // reflexive
  CHECK(weak_submajorize({3, 2, 1, 0, 0}, {0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(weak_submajorize({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("majorization") {
  CHECK(majorize({1, 1, 1}, {0, 1, 2}));
  CHECK_FALSE(majorize({0, 0, 3}, {0, 1, 2}));
  CHECK_FALSE(majorize({3, 2, 1, 0, 0}, {0, 1, 2, 3, 4}));  // sums 6 != 10

  // order-free on both sides
  CHECK(majorize({1, 2, 1}, {2, 1, 1}));
}

TEST_CASE("lift_to_majorization") {
  CHECK(lift_to_majorization({3, 2, 1, 0, 0}, {0, 1, 2, 3, 4}) == Vec{3, 2, 2, 2, 1});
  CHECK(lift_to_majorization({1, 1, 1}, {0, 1, 2}) == Vec{1, 1, 1});  // equal sums
  CHECK(lift_to_majorization({0, 0}, {0, 2}) == Vec{1, 1});
  CHECK_THROWS_AS(lift_to_majorization({3, 3, 3}, {3, 2, 1}), std::invalid_argument);
}

TEST_CASE("match_parity") {
  CHECK(match_parity({3, 2, 1, 0, 0}, {3, 2, 2, 2, 1}, {0, 1, 2, 3, 4}) ==
        Vec{3, 2, 1, 2, 2});
  // already parity-matching: unchanged
  CHECK(match_parity({1, 0, 1}, {1, 2, 1}, {0, 1, 3}) == Vec{1, 2, 1});
  CHECK(match_parity({0, 0}, {1, 1}, {0, 2}) == Vec{0, 2});

  CHECK_THROWS_AS(match_parity({2, 0}, {1, 1}, {0, 2}), std::invalid_argument);  // x <= z fails
  CHECK_THROWS_AS(match_parity({0, 0}, {1, 2}, {0, 2}), std::invalid_argument);  // z not <= y
  CHECK_THROWS_AS(match_parity({0, 1}, {1, 1}, {0, 2}), std::invalid_argument);  // sum parity
}

TEST_CASE("lift postconditions on random weakly sub-majorized pairs") {
  std::mt19937_64 rng(3);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int round = 0; round < 2000; ++round) {
    const int n = uni(1, 8);
    Vec y(n), x;
    for (int& v : y) v = uni(-5, 5);
    x = y;
    for (int m = uni(0, 2 * n); m > 0; --m) {
      const int a = uni(0, n - 1), b = uni(0, n - 1);
      if (x[a] > x[b]) {
        --x[a];
        ++x[b];
      }
    }
    for (int cuts = uni(0, 6); cuts > 0; --cuts) --x[uni(0, n - 1)];
    std::shuffle(x.begin(), x.end(), rng);
    REQUIRE(weak_submajorize(x, y));
    const Vec z = lift_to_majorization(x, y);
    CHECK(leq(x, z));
    CHECK(majorize(z, y));
  }
}

TEST_CASE("match_parity postconditions on random instances, distinct targets") {
  std::mt19937_64 rng(4);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int round = 0; round < 2000; ++round) {
    const int n = uni(1, 8);
    std::set<int> pool;
    while (static_cast<int>(pool.size()) < n) pool.insert(uni(-8, 8));
    Vec y(pool.begin(), pool.end());
    std::shuffle(y.begin(), y.end(), rng);
    Vec z = y;
    for (int m = uni(0, 3 * n); m > 0; --m) {
      const int a = uni(0, n - 1), b = uni(0, n - 1);
      if (z[a] > z[b]) {
        --z[a];
        ++z[b];
      }
    }
    std::shuffle(z.begin(), z.end(), rng);
    Vec x = z;
    for (int& v : x) v -= uni(0, 3);
    const long long sx = std::accumulate(x.begin(), x.end(), 0LL);
    const long long sy = std::accumulate(y.begin(), y.end(), 0LL);
    if ((sx - sy) & 1) --x[0];

    const Vec z2 = match_parity(x, z, y);
    CHECK(leq(x, z2));
    CHECK(majorize(z2, y));
    for (int k = 0; k < n; ++k) CHECK(((x[k] ^ z2[k]) & 1) == 0);
  }
}
