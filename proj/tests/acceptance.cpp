// Acceptance suite: one pass/fail line per criterion, details on failure.
//
//   ./build/tests/acceptance [--force] [--jobs N]
//
// --force adds the 2^16 (B_4, C_4) and 2^20 (D_5) exhaustive systems.

#include <cstdio>
#include <cstring>
#include <string>

#include "coxtour/verify.hpp"

int main(int argc, char** argv) {
  coxtour::verify::Options opts;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--force") == 0) {
      opts.force = true;
    } else if (std::strcmp(argv[a], "--jobs") == 0 && a + 1 < argc) {
      opts.jobs = std::atoi(argv[++a]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--force] [--jobs N]\n");
      return 64;
    }
  }

  const auto criteria = coxtour::verify::run_acceptance(opts);

  int failed = 0;
  for (const auto& crit : criteria) {
    std::printf("criterion %d  %-88s %s  (%.2f s)\n", crit.number, crit.title.c_str(),
                crit.pass ? "PASS" : "FAIL", crit.elapsed_ms / 1000.0);
    for (const auto& check : crit.checks) {
      if (crit.pass) continue;  // detail lines only when something went wrong
      std::string where = check.name;
      if (!check.family.empty())
        where += " " + check.family + "_" + std::to_string(check.rank);
      std::printf("    %-60s %s  %s\n", where.c_str(), check.pass ? "ok" : "FAIL",
                  check.info.c_str());
      if (!check.pass && !check.counterexample.is_null())
        std::printf("      counterexample: %s\n", check.counterexample.dump().c_str());
    }
    if (!crit.pass) ++failed;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
