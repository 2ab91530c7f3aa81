#include "coxtour/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "coxtour/embeddings.hpp"
#include "coxtour/generators.hpp"
#include "coxtour/interchange.hpp"
#include "coxtour/majorization.hpp"
#include "coxtour/oracle.hpp"
#include "coxtour/scan.hpp"
#include "coxtour/score_sequences.hpp"
#include "coxtour/signed_permutation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxtour::verify {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Criterion new_criterion(int number, std::string title) {
  Criterion c;
  c.number = number;
  c.title = std::move(title);
  return c;
}

Check make_check(const std::string& name, const RootSystem* sys, bool pass,
                 Clock::time_point start) {
  Check c;
  c.name = name;
  if (sys) {
    c.family = family_name(sys->family);
    c.rank = sys->rank;
  }
  c.pass = pass;
  c.elapsed_ms = elapsed_ms(start);
  return c;
}

void add(Criterion& criterion, Check check) {
  criterion.pass = criterion.pass && check.pass;
  criterion.elapsed_ms += check.elapsed_ms;
  criterion.checks.push_back(std::move(check));
}

std::vector<RootSystem> exhaustive_systems(bool force) {
  std::vector<RootSystem> v = {{Family::B, 2}, {Family::B, 3}, {Family::C, 2},
                               {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};
  if (force) {
    v.push_back({Family::B, 4});
    v.push_back({Family::C, 4});
    v.push_back({Family::D, 5});
  }
  return v;
}

std::vector<RootSystem> classical_systems() {
  return {{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}};
}

// ---- criterion 1: achieved score sets equal the lattice descriptions ----

Criterion criterion_classification(bool force) {
  Criterion crit = new_criterion(1, "classification equivalence: achieved scores == lattice conditions");
  for (const RootSystem& sys : exhaustive_systems(force)) {
    const auto start = Clock::now();
    const auto achieved = scan::achieved_score_keys(sys, {true, force});
    std::vector<scan::ScoreKey> lattice;
    for (const auto& s : oracle::lattice_score_set(sys)) lattice.push_back(scan::score_key(s));
    std::sort(lattice.begin(), lattice.end());

    Check check = make_check("classification", &sys, achieved == lattice, start);
    check.info = "scores=" + std::to_string(achieved.size());
    if (!check.pass) {
      std::vector<scan::ScoreKey> diff;
      std::set_symmetric_difference(achieved.begin(), achieved.end(), lattice.begin(),
                                    lattice.end(), std::back_inserter(diff));
      if (!diff.empty()) {
        const ScoreVector s{scan::unpack_score(diff.front(), sys.rank)};
        check.counterexample = {{"score", score_to_json(s)},
                                {"achieved", std::binary_search(achieved.begin(),
                                                                achieved.end(), diff.front())}};
      }
    }
    add(crit, std::move(check));
  }
  return crit;
}

// ---- criterion 2: construct realizes every member of the lattice set ----

Criterion criterion_construct(bool force) {
  Criterion crit = new_criterion(2, "constructive soundness: score(construct(s)) == s, plus the rank-5 trace");
  for (const RootSystem& sys : exhaustive_systems(force)) {
    const auto start = Clock::now();
    const auto lattice = oracle::lattice_score_set(sys);
    bool pass = true;
    json counterexample;
    for (const auto& s : lattice) {
      try {
        const Constructed built = construct(sys, s);
        if (score(built.tournament) != s) throw internal_error("score mismatch");
      } catch (const std::exception& e) {
        pass = false;
        counterexample = {{"score", score_to_json(s)}, {"error", e.what()}};
        break;
      }
    }
    Check check = make_check("construct-soundness", &sys, pass, start);
    check.info = "constructed=" + std::to_string(lattice.size());
    check.counterexample = std::move(counterexample);
    add(crit, std::move(check));
  }

  // the worked D_5 example must reproduce the documented intermediates
  {
    const auto start = Clock::now();
    const RootSystem d5(Family::D, 5);
    bool pass = true;
    json counterexample;
    try {
      const ScoreVector s = ScoreVector::from_halves({"3", "-2", "-1", "0", "0"});
      const Constructed built = construct(d5, s);
      const TraceStage* lift = built.trace.find("lift");
      const TraceStage* parity = built.trace.find("parity");
      const std::vector<int> want_z = {3, 2, 2, 2, 1};
      const std::vector<int> want_z2 = {3, 2, 1, 2, 2};
      if (!lift || lift->vec != want_z) {
        pass = false;
        counterexample["stage"] = "lift";
      } else if (!parity || parity->vec != want_z2) {
        pass = false;
        counterexample["stage"] = "parity";
      } else if (score(built.tournament) != s) {
        pass = false;
        counterexample["stage"] = "final";
      }
    } catch (const std::exception& e) {
      pass = false;
      counterexample["error"] = e.what();
    }
    Check check = make_check("construct-worked-example", nullptr, pass, start);
    check.family = "D";
    check.rank = 5;
    check.counterexample = std::move(counterexample);
    add(crit, std::move(check));
  }
  return crit;
}

// ---- criterion 3: weighted generator counts match the distance formula ----

Criterion criterion_regularity(bool force) {
  Criterion crit = new_criterion(3, "degree regularity: weighted generator count == (||s_Phi||^2-||s||^2)/2");
  auto systems = exhaustive_systems(force);
  const auto classical = classical_systems();
  systems.insert(systems.end(), classical.begin(), classical.end());
  for (const RootSystem& sys : systems) {
    const auto start = Clock::now();
    const auto report = scan::regularity_scan(sys, {true, force});
    Check check = make_check("regularity", &sys, report.ok, start);
    check.info = "tournaments=" + std::to_string(report.tournaments);
    if (!report.ok) {
      const Tournament t = Tournament::from_code(sys, report.counterexample_code);
      check.counterexample = {{"tournament", tournament_to_json(t)},
                              {"weightedTotal", generator_counts(t).weighted_total()},
                              {"degree", degree(sys, score(t))}};
    }
    add(crit, std::move(check));
  }
  return crit;
}

// ---- criterion 4: interchange graphs are d-regular; connectivity reported ----

Criterion criterion_interchange(bool force) {
  Criterion crit = new_criterion(4, "interchange graphs: d-regular counting multiplicity (connectivity reported)");
  auto systems = exhaustive_systems(force);
  const auto classical = classical_systems();
  systems.insert(systems.end(), classical.begin(), classical.end());
  for (const RootSystem& sys : systems) {
    const auto start = Clock::now();
    const auto fibers = scan::collect_fibers(sys, {true, force});
    const int count = static_cast<int>(fibers.size());
    std::vector<std::uint8_t> regular(count, 0), connected(count, 0);
    std::vector<std::string> errors(count);

#pragma omp parallel for schedule(dynamic)
    for (int f = 0; f < count; ++f) {
      try {
        const ScoreVector s{scan::unpack_score(fibers[f].first, sys.rank)};
        const InterchangeGraph g = build_interchange_graph_from_codes(sys, s, fibers[f].second);
        regular[f] = is_regular(g) ? 1 : 0;
        connected[f] = is_connected(g) ? 1 : 0;
      } catch (const std::exception& e) {
        errors[f] = e.what();
      }
    }

    bool pass = true;
    json counterexample;
    int connected_count = 0;
    for (int f = 0; f < count; ++f) {
      connected_count += connected[f];
      if (pass && (!regular[f] || !errors[f].empty())) {
        pass = false;
        const ScoreVector s{scan::unpack_score(fibers[f].first, sys.rank)};
        counterexample = {{"score", score_to_json(s)}};
        if (!errors[f].empty()) counterexample["error"] = errors[f];
      }
    }
    Check check = make_check("interchange-regular", &sys, pass, start);
    check.info = "fibers=" + std::to_string(count) +
                 " connected=" + std::to_string(connected_count) + "/" + std::to_string(count);
    check.counterexample = std::move(counterexample);
    add(crit, std::move(check));
  }
  return crit;
}

// ---- criterion 5: embeddings preserve scores and double the generators ----

struct EmbedLaw {
  RootSystem sys;
  // host cyclic triangles expected from the source's generator counts
  long long (*host_triangles)(const GeneratorCounts&, int n);
};

Criterion criterion_embeddings() {
  Criterion crit = new_criterion(5, "embeddings: host score laws, antisymmetry, triangle-count correspondences");
  const EmbedLaw laws[] = {
      {{Family::B, 3},
       [](const GeneratorCounts& c, int) { return 2 * c.weighted_total(); }},
      {{Family::C, 2},
       [](const GeneratorCounts& c, int) { return 2 * c.weighted_total(); }},
      {{Family::D, 3},
       [](const GeneratorCounts& c, int n) {
         return 2 * (c.cyclic + c.balanced) + static_cast<long long>(n) * n;
       }},
  };
  for (const EmbedLaw& law : laws) {
    const auto start = Clock::now();
    const RootSystem& sys = law.sys;
    const int n = sys.rank;
    bool pass = true;
    json counterexample;
    oracle::for_each_tournament(sys, [&](const Tournament& t) {
      if (!pass) return;
      const EmbeddedTournament emb = embed(t);
      const ScoreVector s = score(t);
      const ScoreVector host_score = score(emb.host);

      std::vector<int> want = s.doubled;
      for (int d : s.doubled) want.push_back(-d);
      if (sys.family != Family::B) want.push_back(0);
      bool ok = host_score.doubled == want;

      if (ok && sys.family == Family::B) {
        std::vector<int> swap_img(2 * n);
        for (int i = 1; i <= n; ++i) {
          swap_img[i - 1] = n + i;
          swap_img[n + i - 1] = i;
        }
        const Tournament relabeled =
            apply_signed_permutation(emb.host, SignedPermutation(swap_img));
        ok = reverse(relabeled, positive_roots(relabeled.system)) == emb.host;
      }

      if (ok) {
        const long long host_cyclic = generator_counts(emb.host).cyclic;
        ok = host_cyclic == law.host_triangles(generator_counts(t), n);
      }

      if (!ok) {
        pass = false;
        counterexample = {{"tournament", tournament_to_json(t)},
                          {"host", tournament_to_json(emb.host)}};
      }
    });
    Check check = make_check("embedding", &sys, pass, start);
    check.counterexample = std::move(counterexample);
    add(crit, std::move(check));
  }
  return crit;
}

// ---- criterion 6: theta closed forms and doubling identities, n = 1..50 ----

Criterion criterion_theta() {
  Criterion crit = new_criterion(6, "theta identities: exact closed forms and A-doubling laws, n = 1..50");
  const auto start = Clock::now();
  bool pass = true;
  json counterexample;
  for (long long n = 1; n <= 50 && pass; ++n) {
    const int ni = static_cast<int>(n);
    const long long th_a = theta_eighths({Family::A, ni});          // 8 * theta(A_{n-1})
    const long long th_a2n = theta_eighths({Family::A, 2 * ni});
    const long long th_a2n1 = theta_eighths({Family::A, 2 * ni + 1});
    const long long th_b = theta_eighths({Family::B, ni});
    const long long th_c = theta_eighths({Family::C, ni});
    const long long th_d = n >= 2 ? theta_eighths({Family::D, ni}) : 0;

    bool ok = th_a == n * (n - 1) * (n + 1) / 3;
    ok = ok && th_b == n * (2 * n - 1) * (2 * n + 1) / 3;
    ok = ok && th_c == 2 * n * (n + 1) * (2 * n + 1) / 3;
    ok = ok && (n < 2 || th_d == 2 * n * (n - 1) * (2 * n - 1) / 3);
    ok = ok && 2 * th_b == th_a2n;
    ok = ok && 2 * th_c == th_a2n1;
    ok = ok && (n < 2 || 2 * th_d == th_a2n1 - 8 * n * n);
    if (!ok) {
      pass = false;
      counterexample = {{"n", n}};
    }
  }
  Check check = make_check("theta-identities", nullptr, pass, start);
  check.counterexample = std::move(counterexample);
  add(crit, std::move(check));
  return crit;
}

// ---- criterion 7: classical win vectors == permutahedron lattice points ----

Criterion criterion_win_lattice() {
  Criterion crit = new_criterion(7, "classical win vectors == integer points of the permutahedron, n <= 5");
  for (int n = 1; n <= 5; ++n) {
    const auto start = Clock::now();
    const RootSystem sys(Family::A, n);
    std::set<std::vector<int>> achieved;
    oracle::for_each_tournament(sys,
                                [&](const Tournament& t) { achieved.insert(win_vector(t)); });
    const auto lattice = oracle::permutahedron_points(n);
    const std::vector<std::vector<int>> achieved_list(achieved.begin(), achieved.end());
    bool pass = achieved_list == lattice;
    if (n == 3) pass = pass && achieved.size() == 7;
    Check check = make_check("win-lattice", &sys, pass, start);
    check.info = "points=" + std::to_string(achieved.size());
    if (!pass) {
      std::vector<std::vector<int>> diff;
      std::set_symmetric_difference(achieved_list.begin(), achieved_list.end(),
                                    lattice.begin(), lattice.end(),
                                    std::back_inserter(diff));
      if (!diff.empty()) check.counterexample = {{"winVector", diff.front()}};
    }
    add(crit, std::move(check));
  }
  return crit;
}

// ---- criterion 8: randomized postcondition checks for the pipeline steps ----

struct Fuzz {
  std::mt19937_64 rng;

  explicit Fuzz(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

  std::vector<int> vec(int n, int lo, int hi) {
    std::vector<int> v(n);
    for (int& x : v) x = uniform(lo, hi);
    return v;
  }

  std::vector<int> distinct_vec(int n, int lo, int hi) {
    std::set<int> pool;
    while (static_cast<int>(pool.size()) < n) pool.insert(uniform(lo, hi));
    std::vector<int> v(pool.begin(), pool.end());
    shuffle(v);
    return v;
  }

  // transfers from larger to smaller coordinates keep the result majorized
  void robin_hood(std::vector<int>& v, int moves) {
    const int n = static_cast<int>(v.size());
    if (n < 2) return;
    for (int k = 0; k < moves; ++k) {
      const int a = uniform(0, n - 1), b = uniform(0, n - 1);
      if (v[a] > v[b]) {
        --v[a];
        ++v[b];
      }
    }
  }

  void shuffle(std::vector<int>& v) { std::shuffle(v.begin(), v.end(), rng); }
};

Criterion criterion_fuzz() {
  Criterion crit = new_criterion(8, "property fuzzing: lift / parity / even-jumps postconditions, 10^4 each");
  constexpr int kRounds = 10000;
  Fuzz fz(0xC0C5E701u);

  auto leq = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  };

  {
    const auto start = Clock::now();
    bool pass = true;
    json counterexample;
    for (int round = 0; round < kRounds && pass; ++round) {
      const int n = fz.uniform(1, 8);
      std::vector<int> y = fz.vec(n, -5, 5);
      std::vector<int> x = y;
      fz.robin_hood(x, fz.uniform(0, 2 * n));
      for (int cuts = fz.uniform(0, 8); cuts > 0; --cuts) --x[fz.uniform(0, n - 1)];
      fz.shuffle(x);
      try {
        if (!weak_submajorize(x, y)) throw internal_error("generator broke x <=_w y");
        const std::vector<int> z = lift_to_majorization(x, y);
        if (!leq(x, z) || !majorize(z, y)) throw internal_error("postcondition");
      } catch (const std::exception& e) {
        pass = false;
        counterexample = {{"x", x}, {"y", y}, {"error", e.what()}};
      }
    }
    Check check = make_check("fuzz-lift", nullptr, pass, start);
    check.info = "rounds=" + std::to_string(kRounds);
    check.counterexample = std::move(counterexample);
    add(crit, std::move(check));
  }

  {
    const auto start = Clock::now();
    bool pass = true;
    json counterexample;
    for (int round = 0; round < kRounds && pass; ++round) {
      const int n = fz.uniform(1, 8);
      // Targets with tied entries can rule out any parity-matched z' at all
      // (x = (4,4,4,4), z = y = (5,5,5,5) has none), so draw distinct entries
      // as every in-pipeline target has.
      std::vector<int> y = fz.distinct_vec(n, -8, 8);
      std::vector<int> z = y;
      fz.robin_hood(z, fz.uniform(0, 3 * n));
      fz.shuffle(z);
      std::vector<int> x = z;
      for (int& v : x) v -= fz.uniform(0, 3);
      long long sx = 0, sy = 0;
      for (int v : x) sx += v;
      for (int v : y) sy += v;
      if ((sx - sy) & 1) --x[0];
      try {
        const std::vector<int> z2 = match_parity(x, z, y);
        bool ok = leq(x, z2) && majorize(z2, y);
        for (int k = 0; k < n; ++k) ok = ok && !((x[k] ^ z2[k]) & 1);
        if (!ok) throw internal_error("postcondition");
      } catch (const std::exception& e) {
        pass = false;
        counterexample = {{"x", x}, {"z", z}, {"y", y}, {"error", e.what()}};
      }
    }
    Check check = make_check("fuzz-parity", nullptr, pass, start);
    check.info = "rounds=" + std::to_string(kRounds);
    check.counterexample = std::move(counterexample);
    add(crit, std::move(check));
  }

  {
    const auto start = Clock::now();
    bool pass = true;
    json counterexample;
    for (int round = 0; round < kRounds && pass; ++round) {
      const Family family = fz.uniform(0, 1) ? Family::C : Family::D;
      const int n = fz.uniform(2, 8);
      const RootSystem sys(family, n);
      std::vector<int> z = standard_score(sys).as_ints();
      fz.robin_hood(z, fz.uniform(0, 4 * n));
      fz.shuffle(z);
      try {
        std::vector<int> wa = z;
        if (family == Family::C)
          for (int& v : wa) --v;
        const Tournament ta = construct_A_win(wa);
        Tournament base(sys);
        for (int i = 2; i <= n; ++i)
          for (int j = 1; j < i; ++j) {
            base.outcomes[edge_index(sys, SignedEdge::negative(i, j))] =
                ta.outcomes[edge_index(ta.system, SignedEdge::negative(i, j))];
            base.outcomes[edge_index(sys, SignedEdge::positive(i, j))] = 1;
          }
        if (family == Family::C)
          for (int i = 1; i <= n; ++i)
            base.outcomes[edge_index(sys, SignedEdge::loop(i))] = 1;

        // wander inside the fiber so the lemma is not only exercised on the
        // freshly built tournament
        for (int hops = fz.uniform(0, 3); hops > 0; --hops) {
          const auto copies = find_generators(base);
          if (copies.empty()) break;
          base = reverse(base, copies[fz.uniform(0, static_cast<int>(copies.size()) - 1)].support);
        }

        std::vector<int> s(n);
        for (int k = 0; k < n; ++k) s[k] = z[k] - 2 * fz.uniform(0, z[k] / 2);
        const Tournament reduced = reduce_even_jumps(base, ScoreVector::from_ints(s));
        if (score(reduced) != ScoreVector::from_ints(s)) throw internal_error("postcondition");
      } catch (const std::exception& e) {
        pass = false;
        counterexample = {{"z", z}, {"error", e.what()}};
      }
    }
    Check check = make_check("fuzz-even-jumps", nullptr, pass, start);
    check.info = "rounds=" + std::to_string(kRounds);
    check.counterexample = std::move(counterexample);
    add(crit, std::move(check));
  }

  return crit;
}

}  // namespace

std::vector<Criterion> run_acceptance(const Options& opts) {
#ifdef _OPENMP
  if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
#endif
  std::vector<Criterion> out;
  out.push_back(criterion_classification(opts.force));
  out.push_back(criterion_construct(opts.force));
  out.push_back(criterion_regularity(opts.force));
  out.push_back(criterion_interchange(opts.force));
  out.push_back(criterion_embeddings());
  out.push_back(criterion_theta());
  out.push_back(criterion_win_lattice());
  out.push_back(criterion_fuzz());
  return out;
}

bool all_passed(const std::vector<Criterion>& criteria) {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const Criterion& c) { return c.pass; });
}

}  // namespace coxtour::verify
