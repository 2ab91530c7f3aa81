#include "coxtour/majorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxtour/types.hpp"

namespace coxtour {

namespace {

long long vec_sum(const std::vector<int>& v) {
  long long sum = 0;
  for (int x : v) sum += x;
  return sum;
}

bool leq_entrywise(const std::vector<int>& x, const std::vector<int>& z) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] > z[k]) return false;
  return true;
}

}  // namespace

bool weak_submajorize(std::vector<int> x, std::vector<int> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("weak_submajorize: length mismatch");
  std::sort(x.begin(), x.end(), std::greater<int>());
  std::sort(y.begin(), y.end(), std::greater<int>());
  long long px = 0, py = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    px += x[k];
    py += y[k];
    if (px > py) return false;
  }
  return true;
}

bool majorize(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("majorize: length mismatch");
  return vec_sum(x) == vec_sum(y) && weak_submajorize(x, y);
}

std::vector<int> lift_to_majorization(const std::vector<int>& x, const std::vector<int>& y) {
  if (!weak_submajorize(x, y))
    throw std::invalid_argument("lift_to_majorization: x is not weakly sub-majorized by y");
  std::vector<int> z = x;
  long long deficit = vec_sum(y) - vec_sum(x);
  while (deficit-- > 0) {
    const auto min_it = std::min_element(z.begin(), z.end());
    ++*min_it;  // leftmost minimum, so the output is deterministic
  }
  if (!leq_entrywise(x, z) || !majorize(z, y))
    throw internal_error("lift_to_majorization: postcondition violated");
  return z;
}

std::vector<int> match_parity(const std::vector<int>& x, const std::vector<int>& z,
                              const std::vector<int>& y) {
  if (x.size() != z.size() || z.size() != y.size())
    throw std::invalid_argument("match_parity: length mismatch");
  if (!leq_entrywise(x, z))
    throw std::invalid_argument("match_parity: x <= z violated");
  if (!majorize(z, y))
    throw std::invalid_argument("match_parity: z is not majorized by y");
  if ((vec_sum(x) - vec_sum(y)) % 2 != 0)
    throw std::invalid_argument("match_parity: sum(x) and sum(y) differ mod 2");

  const int n = static_cast<int>(z.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] > z[b]; });

  std::vector<int> out = z;
  int delta = -1;  // alternate -1, +1 over the mismatch positions
  for (int p = 0; p < n; ++p) {
    const int i = order[p];
    if ((x[i] ^ z[i]) & 1) {
      out[i] = z[i] + delta;
      delta = -delta;
    }
  }
  if (delta != -1) throw internal_error("match_parity: odd number of parity mismatches");

  bool parity_ok = true;
  for (int i = 0; i < n; ++i)
    if ((x[i] ^ out[i]) & 1) parity_ok = false;
  if (!parity_ok || !leq_entrywise(x, out) || !majorize(out, y))
    throw internal_error("match_parity: postcondition violated");
  return out;
}

}  // namespace coxtour
