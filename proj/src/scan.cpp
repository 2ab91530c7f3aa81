#include "coxtour/scan.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "coxtour/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxtour::scan {

namespace {

// Doubled-score contribution of one edge: acc[a] += sign*ca (+ acc[b] += sign*cb).
struct EdgeTerm {
  std::int8_t a, b, ca, cb;
};

std::vector<EdgeTerm> edge_terms(const RootSystem& sys) {
  std::vector<EdgeTerm> terms;
  terms.reserve(sys.edge_count());
  for (const auto& e : positive_roots(sys)) {
    switch (e.kind) {
      case EdgeKind::Negative:
        terms.push_back({std::int8_t(e.i - 1), std::int8_t(e.j - 1), 1, -1});
        break;
      case EdgeKind::Positive:
        terms.push_back({std::int8_t(e.i - 1), std::int8_t(e.j - 1), 1, 1});
        break;
      case EdgeKind::Half:
        terms.push_back({std::int8_t(e.i - 1), -1, 1, 0});
        break;
      case EdgeKind::Loop:
        terms.push_back({std::int8_t(e.i - 1), -1, 2, 0});
        break;
    }
  }
  return terms;
}

// Bit positions of the generator template edges, resolved once per system.
struct TripleIdx {
  int nij, nik, njk;
  int pij, pik, pjk;  // -1 in family A
};

struct PairIdx {
  int neg, pos;
  int sol_i, sol_j;  // half or loop bits
};

struct GenTables {
  std::vector<TripleIdx> triples;
  std::vector<PairIdx> pairs;  // non-empty for B (halves) and C (loops)
  bool has_pos = false;
  bool has_half = false;
  bool has_loop = false;
};

GenTables gen_tables(const RootSystem& sys) {
  GenTables gt;
  gt.has_pos = sys.has_positive_edges();
  gt.has_half = sys.has_half_edges();
  gt.has_loop = sys.has_loops();
  const int n = sys.rank;
  auto neg = [&](int i, int j) { return edge_index(sys, SignedEdge::negative(i, j)); };
  auto pos = [&](int i, int j) { return edge_index(sys, SignedEdge::positive(i, j)); };
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) {
        TripleIdx tr{neg(i, j), neg(i, k), neg(j, k), -1, -1, -1};
        if (gt.has_pos) {
          tr.pij = pos(i, j);
          tr.pik = pos(i, k);
          tr.pjk = pos(j, k);
        }
        gt.triples.push_back(tr);
      }
  if (gt.has_half || gt.has_loop) {
    const int sol_base = 2 * sys.pair_count();
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j)
        gt.pairs.push_back({neg(i, j), pos(i, j), sol_base + i - 1, sol_base + j - 1});
  }
  return gt;
}

inline int bit_of(std::uint32_t code, int m, int k) { return (code >> (m - 1 - k)) & 1u; }

long long weighted_count(const GenTables& gt, std::uint32_t code, int m) {
  long long count = 0;
  for (const auto& tr : gt.triples) {
    const int bnij = bit_of(code, m, tr.nij);
    const int bnik = bit_of(code, m, tr.nik);
    const int bnjk = bit_of(code, m, tr.njk);
    if (bnij == bnjk && bnij != bnik) ++count;  // cyclic
    if (gt.has_pos) {
      const int bpij = bit_of(code, m, tr.pij);
      const int bpik = bit_of(code, m, tr.pik);
      const int bpjk = bit_of(code, m, tr.pjk);
      if (bnij == bpjk && bnij != bpik) ++count;
      if (bnik == bpjk && bnik != bpij) ++count;
      if (bnjk == bpik && bnjk != bpij) ++count;
    }
  }
  for (const auto& pr : gt.pairs) {
    const int bn = bit_of(code, m, pr.neg);
    const int bp = bit_of(code, m, pr.pos);
    const int bsi = bit_of(code, m, pr.sol_i);
    const int bsj = bit_of(code, m, pr.sol_j);
    if (gt.has_half) {
      if (bn == bsj && bn != bsi) ++count;
      if (bsi == bsj && bsi != bp) ++count;
    } else {  // clovers count twice
      if (bn == bp && bsi != bn) count += 2;
      if (bn != bp && bsj == bn) count += 2;
    }
  }
  return count;
}

void score_into(const std::vector<EdgeTerm>& terms, int m, std::uint32_t code, int* acc) {
  for (int k = 0; k < m; ++k) {
    const int sign = bit_of(code, m, k) ? 1 : -1;
    const EdgeTerm& e = terms[k];
    acc[int(e.a)] += sign * e.ca;
    if (e.b >= 0) acc[int(e.b)] += sign * e.cb;
  }
}

ScoreKey pack_acc(const int* acc, int n) {
  ScoreKey key = 0;
  for (int k = 0; k < n; ++k)
    key |= static_cast<ScoreKey>(std::uint8_t(acc[k] + 128)) << (8 * (7 - k));
  return key;
}

void check_rank_packable(const RootSystem& sys) {
  if (sys.rank > 8)
    throw guard_error("scan kernels pack scores into 8 bytes; rank of " + sys.name() +
                      " is too large");
}

int thread_slots(bool parallel) {
#ifdef _OPENMP
  if (parallel) return omp_get_max_threads();
#else
  (void)parallel;
#endif
  return 1;
}

inline int thread_slot() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace

ScoreKey pack_score(const std::vector<int>& doubled) {
  if (doubled.size() > 8) throw guard_error("pack_score supports at most 8 coordinates");
  int acc[8] = {0};
  for (std::size_t k = 0; k < doubled.size(); ++k) acc[k] = doubled[k];
  return pack_acc(acc, static_cast<int>(doubled.size()));
}

std::vector<int> unpack_score(ScoreKey key, int n) {
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k)
    out[k] = static_cast<int>((key >> (8 * (7 - k))) & 0xff) - 128;
  return out;
}

ScoreKey score_key(const ScoreVector& s) { return pack_score(s.doubled); }

std::vector<ScoreKey> achieved_score_keys(const RootSystem& sys, const Options& opts) {
  oracle::check_enumeration_guard(sys, opts.force);
  check_rank_packable(sys);
  const auto terms = edge_terms(sys);
  const int m = sys.edge_count();
  const int n = sys.rank;
  const std::int64_t total = std::int64_t{1} << m;

  std::vector<std::unordered_set<ScoreKey>> locals(thread_slots(opts.parallel));
#pragma omp parallel for schedule(static) if (opts.parallel)
  for (std::int64_t code = 0; code < total; ++code) {
    int acc[8] = {0};
    score_into(terms, m, static_cast<std::uint32_t>(code), acc);
    locals[thread_slot()].insert(pack_acc(acc, n));
  }

  std::unordered_set<ScoreKey> merged;
  for (const auto& local : locals) merged.insert(local.begin(), local.end());
  std::vector<ScoreKey> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<ScoreKey, std::vector<std::uint32_t>>> collect_fibers(
    const RootSystem& sys, const Options& opts) {
  oracle::check_enumeration_guard(sys, opts.force);
  check_rank_packable(sys);
  const auto terms = edge_terms(sys);
  const int m = sys.edge_count();
  const int n = sys.rank;
  const std::int64_t total = std::int64_t{1} << m;

  using FiberMap = std::unordered_map<ScoreKey, std::vector<std::uint32_t>>;
  std::vector<FiberMap> locals(thread_slots(opts.parallel));
#pragma omp parallel for schedule(static) if (opts.parallel)
  for (std::int64_t code = 0; code < total; ++code) {
    int acc[8] = {0};
    score_into(terms, m, static_cast<std::uint32_t>(code), acc);
    locals[thread_slot()][pack_acc(acc, n)].push_back(static_cast<std::uint32_t>(code));
  }

  FiberMap merged;
  for (auto& local : locals)
    for (auto& [key, codes] : local) {
      auto& dst = merged[key];
      dst.insert(dst.end(), codes.begin(), codes.end());
    }
  std::vector<std::pair<ScoreKey, std::vector<std::uint32_t>>> out;
  out.reserve(merged.size());
  for (auto& [key, codes] : merged) {
    std::sort(codes.begin(), codes.end());
    out.emplace_back(key, std::move(codes));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::uint32_t> fiber_codes(const RootSystem& sys, ScoreKey key,
                                       const Options& opts) {
  oracle::check_enumeration_guard(sys, opts.force);
  check_rank_packable(sys);
  const auto terms = edge_terms(sys);
  const int m = sys.edge_count();
  const int n = sys.rank;
  const std::int64_t total = std::int64_t{1} << m;

  std::vector<std::vector<std::uint32_t>> locals(thread_slots(opts.parallel));
#pragma omp parallel for schedule(static) if (opts.parallel)
  for (std::int64_t code = 0; code < total; ++code) {
    int acc[8] = {0};
    score_into(terms, m, static_cast<std::uint32_t>(code), acc);
    if (pack_acc(acc, n) == key)
      locals[thread_slot()].push_back(static_cast<std::uint32_t>(code));
  }

  std::vector<std::uint32_t> out;
  for (const auto& local : locals) out.insert(out.end(), local.begin(), local.end());
  std::sort(out.begin(), out.end());
  return out;
}

RegularityReport regularity_scan(const RootSystem& sys, const Options& opts) {
  oracle::check_enumeration_guard(sys, opts.force);
  check_rank_packable(sys);
  const auto terms = edge_terms(sys);
  const auto gt = gen_tables(sys);
  const int m = sys.edge_count();
  const int n = sys.rank;
  const std::int64_t total = std::int64_t{1} << m;
  const long long norm_phi = standard_score(sys).norm_sq_doubled();

  std::int64_t bad = total;  // sentinel: no failure found
#pragma omp parallel for schedule(static) reduction(min : bad) if (opts.parallel)
  for (std::int64_t code = 0; code < total; ++code) {
    int acc[8] = {0};
    score_into(terms, m, static_cast<std::uint32_t>(code), acc);
    long long norm = 0;
    for (int k = 0; k < n; ++k) norm += static_cast<long long>(acc[k]) * acc[k];
    if (8 * weighted_count(gt, static_cast<std::uint32_t>(code), m) != norm_phi - norm)
      bad = std::min(bad, code);
  }

  RegularityReport report;
  report.tournaments = static_cast<std::uint64_t>(total);
  report.ok = (bad == total);
  report.counterexample_code = report.ok ? 0 : static_cast<std::uint32_t>(bad);
  return report;
}

}  // namespace coxtour::scan
