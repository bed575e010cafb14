// Acceptance gate: ten end-to-end checks, one pass/fail line each, nonzero
// exit when any fails. Every bound asserted here is pinned below as a named
// constant; a tolerance of 1e-9 on double comparisons covers float noise
// only, never a weakened guarantee.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccsp/apps.hpp"
#include "ccsp/emulator.hpp"
#include "ccsp/errors.hpp"
#include "ccsp/graph.hpp"
#include "ccsp/hopset.hpp"
#include "ccsp/ledger.hpp"
#include "ccsp/minplus.hpp"
#include "ccsp/primitives.hpp"
#include "ccsp/rng.hpp"
#include "ccsp/softhit.hpp"

using namespace ccsp;

namespace {

// Pinned thresholds.
constexpr double kFloatSlack = 1e-9;          // double-comparison guard only
constexpr double kEmulatorSuiteBudget = 600;  // seconds, criterion 1
constexpr double kSlopeBand = 0.15;           // criterion 2
constexpr double kConstantStability = 0.30;   // criterion 2
constexpr double kHopsetSizeConstant = 4.0;   // criterion 3
constexpr double kPlanRatioBound = 4.0;       // criterion 7
constexpr double kPerPrimitiveRatioBound = 6.0;  // criterion 7
constexpr double kSoftHitVerifyConstant = 8.0;   // criterion 8
constexpr double kDetHittingConstant = 3.0;      // criterion 8

struct Outcome {
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Shared suite: 50 cases spanning six families, three sizes, two epsilons
// and two level counts. Criteria 1, 9 and 10 all run over this list.
// ---------------------------------------------------------------------------

struct SuiteCase {
  std::string name;
  Graph g;
  double eps;
  unsigned r;
  std::uint64_t seed;
};

Graph suite_family(int family, std::size_t n, std::uint64_t seed) {
  switch (family) {
    case 0: return path_graph(n);
    case 1: return cycle_graph(n);
    case 2:
      if (n == 256) return grid_graph(16, 16);
      if (n == 512) return grid_graph(16, 32);
      return grid_graph(32, 32);
    case 3: return gnp_graph(n, 2.0 / double(n), seed);
    case 4: return gnp_graph(n, 8.0 / double(n), seed);
    default: return gnp_graph(n, 0.05, seed);
  }
}

const char* family_name(int family) {
  switch (family) {
    case 0: return "path";
    case 1: return "cycle";
    case 2: return "grid";
    case 3: return "gnp-2n";
    case 4: return "gnp-8n";
    default: return "gnp-005";
  }
}

std::vector<SuiteCase> make_shared_suite() {
  const std::size_t sizes[] = {256, 512, 1024};
  const double epss[] = {0.25, 0.5};
  const unsigned rs[] = {2, 3};
  std::vector<SuiteCase> suite;
  for (int i = 0; i < 50; ++i) {
    const int family = i % 6;
    const std::size_t n = sizes[i % 3];
    const double eps = epss[i % 2];
    const unsigned r = rs[(i / 2) % 2];
    const std::uint64_t seed = 1000 + std::uint64_t(i);
    std::ostringstream name;
    name << family_name(family) << "-n" << n << "-eps" << eps << "-r" << r
         << "-s" << seed;
    suite.push_back({name.str(), suite_family(family, n, seed), eps, r, seed});
  }
  return suite;
}

// ---------------------------------------------------------------------------
// Criterion 1: emulator stretch across the shared suite, exact oracle.
// ---------------------------------------------------------------------------

Outcome criterion_1() {
  Outcome out;
  const double t0 = now_seconds();
  auto suite = make_shared_suite();
  std::size_t violations = 0, pairs = 0, dirty = 0;
  for (const auto& c : suite) {
    auto em = build_emulator(c.g, c.eps, c.r, EmulatorMode::kIdeal, c.seed,
                             nullptr);
    if (!em.clean()) ++dirty;
    auto chk = verify_emulator(c.g, em);
    violations += chk.stretch_violations + chk.lower_violations;
    pairs += chk.checked_pairs;
  }
  const double elapsed = now_seconds() - t0;
  out.pass = violations == 0 && dirty == 0 && elapsed < kEmulatorSuiteBudget;
  std::ostringstream os;
  os << suite.size() << " graphs, " << pairs << " pairs, " << violations
     << " violations, " << elapsed << "s (budget " << kEmulatorSuiteBudget
     << "s)";
  out.detail = os.str();
  out.seconds = elapsed;
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 2: emulator size scaling. Mean edges over 30 seeds per n on
// G(n, n^{-3/4}) (degree ~ n^{1/4}, the density that stresses the sparse
// rule) must fit slope 1 + 1/2^r within the band, with a stable constant.
// ---------------------------------------------------------------------------

Outcome criterion_2() {
  Outcome out;
  const unsigned r = 2;
  const double eps = 0.5;
  const std::size_t seeds = 30;
  const std::size_t ns[] = {512, 1024, 2048, 4096};

  std::vector<double> log_n, log_e, c_values;
  std::ostringstream table;
  for (std::size_t n : ns) {
    double sum = 0.0;
    for (std::size_t s = 0; s < seeds; ++s) {
      const std::uint64_t seed = 7000 + 31 * n + s;
      Graph g = gnp_graph(n, std::pow(double(n), -0.75), seed);
      auto em = build_emulator(g, eps, r, EmulatorMode::kIdeal, seed, nullptr);
      sum += double(em.edges.size());
    }
    const double mean = sum / double(seeds);
    log_n.push_back(std::log(double(n)));
    log_e.push_back(std::log(mean));
    c_values.push_back(mean / (double(r) * std::pow(double(n), 1.25)));
    table << " n=" << n << ":" << mean;
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sx += log_n[i];
    sy += log_e[i];
    sxx += log_n[i] * log_n[i];
    sxy += log_n[i] * log_e[i];
  }
  const double m = double(log_n.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);

  double c_mean = 0.0;
  for (double c : c_values) c_mean += c;
  c_mean /= double(c_values.size());
  double c_worst = 0.0;
  for (double c : c_values) {
    c_worst = std::max(c_worst, std::abs(c - c_mean) / c_mean);
  }

  const double target = 1.0 + 1.0 / 4.0;
  out.pass = std::abs(slope - target) <= kSlopeBand &&
             c_worst <= kConstantStability;
  std::ostringstream os;
  os << "slope " << slope << " (target " << target << " +- " << kSlopeBand
     << "), C " << c_mean << " max deviation " << 100.0 * c_worst << "% (cap "
     << 100.0 * kConstantStability << "%);" << table.str();
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 3: bounded hopsets against the exact hop-bounded oracle.
// ---------------------------------------------------------------------------

Outcome criterion_3() {
  Outcome out;
  std::size_t violations = 0, pairs = 0, misses = 0;
  double worst_c = 0.0;
  std::size_t instances = 0;
  const Dist ts[] = {4, 8, 16};
  const double epss[] = {0.25, 0.5};
  for (int base = 0; base < 5; ++base) {
    Graph g;
    switch (base) {
      case 0: g = gnp_graph(256, 4.0 / 256.0, 41); break;
      case 1: g = gnp_graph(512, 0.02, 42); break;
      case 2: g = gnp_graph(1024, 0.008, 43); break;
      case 3: g = barbell_graph(100, 56); break;
      default: g = grid_graph(24, 24); break;
    }
    for (Dist t : ts) {
      for (double eps : epss) {
        ++instances;
        const std::uint64_t seed = 500 + instances;
        auto h = build_bounded_hopset(g, eps, t, BuildMode::kRandomized, seed,
                                      nullptr);
        misses += h.missed_tables.size();
        auto chk = verify_hopset(g, h, kHopsetSizeConstant);
        violations += chk.stretch_violations + chk.lower_violations;
        pairs += chk.checked_pairs;
        if (!chk.size_ok) ++violations;
        worst_c = std::max(
            worst_c, double(h.edges.size()) /
                         (std::pow(double(g.n()), 1.5) *
                          double(CostModel::word_bits(g.n()))));
      }
    }
  }
  out.pass = violations == 0 && misses == 0;
  std::ostringstream os;
  os << instances << " instances, " << pairs << " pairs, " << violations
     << " violations, " << misses << " table misses, realized size constant "
     << worst_c << " (cap " << kHopsetSizeConstant << ")";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 4: (k,d)-nearest equality with a truncated-BFS oracle,
// including the (distance, id) tie order.
// ---------------------------------------------------------------------------

Outcome criterion_4() {
  Outcome out;
  std::size_t mismatches = 0, instances = 0, rows = 0;
  const std::size_t ks[] = {2, 4, 16, 64};
  const Dist ds[] = {1, 2, 5, 9};
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = 2000 + std::uint64_t(i);
    const std::size_t n = 64u << (i % 4);  // 64..512
    Graph g = suite_family(i % 6, n, seed);
    const std::size_t k = ks[(i / 2) % 4];
    const Dist d = ds[(i / 3) % 4];
    ++instances;
    auto table = k_nearest_bounded(g, k, d, nullptr);
    for (VertexId v = 0; v < g.n(); ++v) {
      auto bfs = bfs_within(g, v, d);
      std::vector<std::pair<Dist, VertexId>> want;
      for (VertexId u = 0; u < g.n(); ++u) {
        if (bfs[u] != kInfDist) want.emplace_back(bfs[u], u);
      }
      std::sort(want.begin(), want.end());
      if (want.size() > k) want.resize(k);
      ++rows;
      const auto& got = table.row(v);
      if (got.size() != want.size()) {
        ++mismatches;
        continue;
      }
      for (std::size_t j = 0; j < want.size(); ++j) {
        if (got[j].val != want[j].first || got[j].col != want[j].second) {
          ++mismatches;
          break;
        }
      }
    }
  }
  out.pass = mismatches == 0;
  std::ostringstream os;
  os << instances << " instances, " << rows << " rows compared, "
     << mismatches << " mismatches";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 5: multi-source shortest paths, ceil(sqrt n) sources.
// ---------------------------------------------------------------------------

Outcome criterion_5() {
  Outcome out;
  std::size_t lower = 0, upper = 0, pairs = 0, dirty = 0;
  const std::size_t sizes[] = {128, 256, 400};
  const double epss[] = {0.25, 0.5};
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = sizes[i % 3];
    const double eps = epss[i % 2];
    const std::uint64_t seed = 3000 + std::uint64_t(i);
    Graph g = suite_family(i % 6, n, seed);

    const auto want = std::size_t(std::ceil(std::sqrt(double(g.n()))));
    std::vector<VertexId> sources;
    Rng rng(seed, "acceptance-mssp-sources");
    while (sources.size() < want) {
      auto v = VertexId(rng.next_below(g.n()));
      bool fresh = true;
      for (VertexId s : sources) fresh = fresh && s != v;
      if (fresh) sources.push_back(v);
    }

    auto res = mssp(g, sources, eps, EmulatorMode::kIdeal,
                    BuildMode::kRandomized, seed, nullptr);
    if (!res.clean) ++dirty;
    auto chk = verify_mssp(g, res);
    lower += chk.lower_violations;
    upper += chk.upper_violations;
    pairs += chk.checked_pairs;
  }
  out.pass = lower == 0 && upper == 0 && dirty == 0;
  std::ostringstream os;
  os << "30 instances, " << pairs << " source-vertex pairs, " << lower
     << " lower violations, " << upper << " stretch violations";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 6: (2+eps) all-pairs estimates across sparse and dense inputs,
// with every phase leaving visible fingerprints in the tag histogram.
// ---------------------------------------------------------------------------

Outcome criterion_6() {
  Outcome out;
  std::size_t lower = 0, upper = 0, pairs = 0, dirty = 0;
  std::size_t phase_l = 0, phase_h = 0, phase_p = 0;
  const double eps = 0.5;
  int idx = 0;
  auto run_one = [&](Graph g, std::uint64_t seed) {
    auto res = apsp_two_eps(g, eps, EmulatorMode::kIdeal,
                            BuildMode::kRandomized, seed, nullptr);
    if (!res.clean()) ++dirty;
    auto rep = verify_estimates(g, res.est, 2.0 + eps, 0.0);
    lower += rep.lower_violations;
    upper += rep.upper_violations;
    pairs += rep.checked_pairs;
    phase_l += rep.phase_l;
    phase_h += rep.phase_h;
    phase_p += rep.phase_p;
  };
  // 18 sparse: three sizes x two densities x three seeds.
  for (std::size_t n : {192, 256, 384}) {
    for (double c : {2.0, 8.0}) {
      for (int s = 0; s < 3; ++s) {
        run_one(gnp_graph(n, c / double(n), 4000 + idx), 4100 + idx);
        ++idx;
      }
    }
  }
  // 12 dense: two sizes x two densities x three seeds.
  for (std::size_t n : {192, 256}) {
    for (double p : {0.15, 0.4}) {
      for (int s = 0; s < 3; ++s) {
        run_one(gnp_graph(n, p, 4500 + idx), 4600 + idx);
        ++idx;
      }
    }
  }
  out.pass = lower == 0 && upper == 0 && dirty == 0 && phase_l > 0 &&
             phase_h > 0 && phase_p > 0;
  std::ostringstream os;
  os << idx << " instances, " << pairs << " pairs, " << lower << "+" << upper
     << " violations, phases L/H/P " << phase_l << "/" << phase_h << "/"
     << phase_p;
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 7: charged-round scaling of the multi-source plan between
// n = 2^8 and n = 2^16 at matched density m = 4n.
// ---------------------------------------------------------------------------

Outcome criterion_7() {
  Outcome out;
  auto small = mssp_round_plan(1u << 8, 4u << 8, 0.5);
  auto large = mssp_round_plan(std::size_t(1) << 16, std::size_t(4) << 16,
                               0.5);
  const double ratio = large.total() / small.total();

  auto ps = small.by_primitive();
  auto pl = large.by_primitive();
  double worst = 0.0;
  std::string worst_key = "-";
  bool keys_match = ps.size() == pl.size();
  for (const auto& [key, value] : ps) {
    auto it = pl.find(key);
    if (it == pl.end()) {
      keys_match = false;
      continue;
    }
    const double r = it->second / value;
    if (r > worst) {
      worst = r;
      worst_key = key;
    }
  }
  out.pass = ratio <= kPlanRatioBound && keys_match &&
             worst <= kPerPrimitiveRatioBound;
  std::ostringstream os;
  os << "totals " << small.total() << " -> " << large.total() << ", ratio "
     << ratio << " (cap " << kPlanRatioBound << "), worst primitive "
     << worst_key << " x" << worst << " (cap " << kPerPrimitiveRatioBound
     << ")";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 8: soft-hitting derandomization suite.
// ---------------------------------------------------------------------------

SoftHitInstance acceptance_soft_instance(std::size_t n, double delta,
                                         std::uint64_t seed) {
  SoftHitInstance inst;
  inst.universe = n;
  inst.delta = delta;
  Rng rng(seed, "acceptance-softhit");
  const auto sets = std::size_t(std::ceil(double(n) / delta));
  const auto size = std::size_t(2.0 * delta);
  for (std::size_t s = 0; s < sets; ++s) {
    std::vector<std::uint32_t> t;
    while (t.size() < size) {
      auto x = std::uint32_t(rng.next_below(n));
      bool fresh = true;
      for (auto y : t) fresh = fresh && y != x;
      if (fresh) t.push_back(x);
    }
    inst.holders.push_back(std::move(t));
  }
  return inst;
}

Outcome criterion_8() {
  Outcome out;
  std::size_t invariant_fails = 0, small_seed_fails = 0, verify_fails = 0;
  std::size_t det_misses = 0, det_size_fails = 0;
  const std::size_t ns[] = {64, 128, 256, 512};
  const double deltas[] = {4.0, 8.0, 32.0};
  auto gen = default_small_seed_generator(16);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = ns[i % 4];
    const double delta = deltas[(i / 4) % 3];
    auto inst = acceptance_soft_instance(n, delta, 6000 + std::uint64_t(i));

    // (a) independent-bits invariant, exact.
    auto derand = derandomize_soft_hitting(inst, nullptr);
    if (!(derand.final_cost <= derand.initial_expectation + kFloatSlack)) {
      ++invariant_fails;
    }
    double prev = derand.initial_expectation;
    for (double e : derand.expectation_trace) {
      if (e > prev + kFloatSlack) ++invariant_fails;
      prev = e;
    }

    // (b) 16-bit small-seed mode, same invariant.
    auto small = derandomize_soft_hitting_small_seed(inst, gen, nullptr);
    if (!(small.final_cost <= small.initial_expectation + kFloatSlack)) {
      ++small_seed_fails;
    }

    // (c) both outputs verify at the standard constants.
    if (!verify_soft_hitting(inst, derand.z, kSoftHitVerifyConstant,
                             kSoftHitVerifyConstant)
             .ok()) {
      ++verify_fails;
    }
    if (!verify_soft_hitting(inst, small.z, kSoftHitVerifyConstant,
                             kSoftHitVerifyConstant)
             .ok()) {
      ++verify_fails;
    }

    // (d) deterministic hitting set over the same holder family.
    HittingFamily family;
    family.universe = n;
    family.k = std::size_t(2.0 * delta);
    family.sets.reserve(inst.holders.size());
    for (const auto& t : inst.holders) {
      family.sets.emplace_back(t.begin(), t.end());
    }
    auto a = deterministic_hitting_set(family, kDetHittingConstant, nullptr);
    det_misses += verify_hitting_set(family, a).missed_sets.size();
    const double bound = 3.0 * kDetHittingConstant * double(n) *
                         std::log(double(n)) / double(family.k);
    if (double(a.size()) > bound) ++det_size_fails;
  }
  out.pass = invariant_fails == 0 && small_seed_fails == 0 &&
             verify_fails == 0 && det_misses == 0 && det_size_fails == 0;
  std::ostringstream os;
  os << "50 instances; invariant fails " << invariant_fails
     << ", small-seed fails " << small_seed_fails << ", verify fails "
     << verify_fails << ", det misses " << det_misses << ", det size fails "
     << det_size_fails;
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 9: deterministic emulator: hard thinning bound per level,
// stretch across the shared suite, bit-identical reruns.
// ---------------------------------------------------------------------------

bool same_build(const Emulator& a, const Emulator& b) {
  if (a.level_of != b.level_of) return false;
  if (a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const auto& x = a.edges[i];
    const auto& y = b.edges[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w || x.level != y.level ||
        x.rule != y.rule) {
      return false;
    }
  }
  return a.sprime_sizes == b.sprime_sizes && a.det_a == b.det_a;
}

Outcome criterion_9() {
  Outcome out;
  auto suite = make_shared_suite();
  std::size_t violations = 0, pairs = 0, thinning_fails = 0, rerun_fails = 0;
  std::size_t dirty = 0;
  for (const auto& c : suite) {
    auto em = build_emulator(c.g, c.eps, c.r, EmulatorMode::kDeterministic,
                             c.seed, nullptr);
    if (!em.clean()) ++dirty;
    for (unsigned i = 0; i + 1 <= em.params.r; ++i) {
      if (double(em.sprime_sizes[i + 1]) >
          double(em.sprime_sizes[i]) * em.params.p[i + 1] + kFloatSlack) {
        ++thinning_fails;
      }
    }
    auto chk = verify_emulator(c.g, em);
    violations += chk.stretch_violations + chk.lower_violations;
    pairs += chk.checked_pairs;
    // The seed argument must be irrelevant.
    auto again = build_emulator(c.g, c.eps, c.r,
                                EmulatorMode::kDeterministic, c.seed + 999,
                                nullptr);
    if (!same_build(em, again)) ++rerun_fails;
  }
  out.pass = violations == 0 && thinning_fails == 0 && rerun_fails == 0 &&
             dirty == 0;
  std::ostringstream os;
  os << suite.size() << " builds, " << pairs << " pairs, " << violations
     << " violations, " << thinning_fails << " thinning fails, "
     << rerun_fails << " rerun mismatches";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 10: near-additive all-pairs estimates over the shared suite.
// ---------------------------------------------------------------------------

Outcome criterion_10() {
  Outcome out;
  auto suite = make_shared_suite();
  std::size_t lower = 0, upper = 0, pairs = 0, dirty = 0;
  for (const auto& c : suite) {
    auto res = apsp_near_additive(c.g, c.eps, c.r, EmulatorMode::kIdeal,
                                  c.seed, nullptr);
    if (!res.clean) ++dirty;
    auto rep = verify_estimates(c.g, res.est, 1.0 + c.eps, res.additive);
    lower += rep.lower_violations;
    upper += rep.upper_violations;
    pairs += rep.checked_pairs;
  }
  out.pass = lower == 0 && upper == 0 && dirty == 0;
  std::ostringstream os;
  os << suite.size() << " graphs, " << pairs << " pairs, " << lower
     << " lower and " << upper << " upper violations";
  out.detail = os.str();
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {"emulator-stretch", criterion_1},
      {"emulator-size-scaling", criterion_2},
      {"hopset-hop-bounded-stretch", criterion_3},
      {"k-nearest-oracle-equality", criterion_4},
      {"multi-source-stretch", criterion_5},
      {"two-plus-eps-apsp", criterion_6},
      {"round-plan-scaling", criterion_7},
      {"soft-hitting-derandomization", criterion_8},
      {"deterministic-emulator", criterion_9},
      {"near-additive-apsp", criterion_10},
  };

  int failures = 0;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    const double t0 = now_seconds();
    Outcome out;
    try {
      out = entries[i].fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double dt = now_seconds() - t0;
    std::printf("[%s] criterion-%zu %s: %s (%.1fs)\n",
                out.pass ? "PASS" : "FAIL", i + 1, entries[i].name,
                out.detail.c_str(), dt);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
