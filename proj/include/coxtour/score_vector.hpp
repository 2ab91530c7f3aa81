#pragma once

#include <string>
#include <vector>

#include "coxtour/types.hpp"

namespace coxtour {

// Exact half-integer vector, stored as 2s so that all arithmetic stays in
// integers. Entries print as "3" or "-1/2".
struct ScoreVector {
  std::vector<int> doubled;

  ScoreVector() = default;
  explicit ScoreVector(std::vector<int> d) : doubled(std::move(d)) {}

  static ScoreVector from_halves(const std::vector<std::string>& entries);
  static ScoreVector from_ints(const std::vector<int>& values);  // doubled = 2*values

  int size() const { return static_cast<int>(doubled.size()); }

  long long sum_doubled() const;
  long long norm_sq_doubled() const;  // ||2s||^2

  ScoreVector abs() const;
  bool all_even() const;
  bool all_odd() const;

  // Valid only when all entries are integers (doubled even).
  std::vector<int> as_ints() const;

  std::string entry_string(int k) const;
  std::vector<std::string> to_strings() const;
  std::string to_string() const;  // "(3,-2,-1,0,0)"

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
  friend bool operator<(const ScoreVector& a, const ScoreVector& b) {
    return a.doubled < b.doubled;
  }
};

// Parses "3", "-2", "1/2", "-3/2" into a doubled value.
int parse_half_string(const std::string& token);

}  // namespace coxtour
