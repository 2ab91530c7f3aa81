#include "coxtour/score_vector.hpp"

#include <cctype>
#include <cstdlib>

namespace coxtour {

int parse_half_string(const std::string& token) {
  std::string s = token;
  bool negative = false;
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = (s[0] == '-');
    pos = 1;
  }
  bool half = false;
  std::string digits;
  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    if (s.substr(slash) != "/2") throw std::invalid_argument("bad score entry '" + token + "'");
    digits = s.substr(pos, slash - pos);
    half = true;
  } else {
    digits = s.substr(pos);
  }
  if (digits.empty() || digits.size() > 9)
    throw std::invalid_argument("bad score entry '" + token + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad score entry '" + token + "'");
  long long v = std::atoll(digits.c_str());
  if (!half) v *= 2;
  if (negative) v = -v;
  return static_cast<int>(v);
}

ScoreVector ScoreVector::from_halves(const std::vector<std::string>& entries) {
  ScoreVector s;
  s.doubled.reserve(entries.size());
  for (const auto& e : entries) s.doubled.push_back(parse_half_string(e));
  return s;
}

ScoreVector ScoreVector::from_ints(const std::vector<int>& values) {
  ScoreVector s;
  s.doubled.reserve(values.size());
  for (int v : values) s.doubled.push_back(2 * v);
  return s;
}

long long ScoreVector::sum_doubled() const {
  long long sum = 0;
  for (int d : doubled) sum += d;
  return sum;
}

long long ScoreVector::norm_sq_doubled() const {
  long long sum = 0;
  for (int d : doubled) sum += static_cast<long long>(d) * d;
  return sum;
}

ScoreVector ScoreVector::abs() const {
  ScoreVector out = *this;
  for (int& d : out.doubled)
    if (d < 0) d = -d;
  return out;
}

bool ScoreVector::all_even() const {
  for (int d : doubled)
    if (d & 1) return false;
  return true;
}

bool ScoreVector::all_odd() const {
  for (int d : doubled)
    if (!(d & 1)) return false;
  return true;
}

std::vector<int> ScoreVector::as_ints() const {
  if (!all_even()) throw std::invalid_argument("score vector is not an integer vector");
  std::vector<int> out;
  out.reserve(doubled.size());
  for (int d : doubled) out.push_back(d / 2);
  return out;
}

std::string ScoreVector::entry_string(int k) const {
  const int d = doubled.at(k);
  if (d % 2 == 0) return std::to_string(d / 2);
  return std::to_string(d) + "/2";
}

std::vector<std::string> ScoreVector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(doubled.size());
  for (int k = 0; k < size(); ++k) out.push_back(entry_string(k));
  return out;
}

std::string ScoreVector::to_string() const {
  std::string out = "(";
  for (int k = 0; k < size(); ++k) {
    if (k) out += ",";
    out += entry_string(k);
  }
  out += ")";
  return out;
}

}  // namespace coxtour
