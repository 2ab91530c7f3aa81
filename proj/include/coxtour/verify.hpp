#pragma once

#include <string>
#include <vector>

#include "coxtour/json_io.hpp"

namespace coxtour::verify {

struct Options {
  bool force = false;  // adds D_5, B_4, C_4 to the exhaustive suites
  int jobs = 0;        // OpenMP thread count; 0 = runtime default
};

struct Check {
  std::string name;
  std::string family;  // empty when not system-specific
  int rank = 0;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string info;          // extra reporting (e.g. connectivity)
  json counterexample;       // reproducer, present on failure
};

struct Criterion {
  int number = 0;
  std::string title;
  bool pass = true;
  double elapsed_ms = 0.0;
  std::vector<Check> checks;
};

// Runs the full verification suite: classification equivalence, constructive
// soundness, degree regularity, interchange-graph regularity (connectivity
// reported), embedding correspondences, the theta identities, the classical
// win-vector lattice check, and the property fuzzers.
std::vector<Criterion> run_acceptance(const Options& opts);

bool all_passed(const std::vector<Criterion>& criteria);

}  // namespace coxtour::verify
