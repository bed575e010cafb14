#pragma once

// Application pipelines on top of the emulator/hopset/table primitives:
//
//   apsp_near_additive  all-pairs estimates with d <= delta <= (1+eps) d + B,
//                       B the emulator additive term: build the emulator,
//                       broadcast it, answer from emulator distances.
//   mssp                (1+eps) multi-source distances for up to 2 sqrt(n)
//                       sources: short pairs through a bounded hopset plus
//                       source detection, long pairs through the emulator,
//                       final estimate the minimum of the two.
//   apsp_two_eps        (2+eps) all-pairs estimates via three phases: L
//                       (emulator, long pairs), H (detours through a hitting
//                       set of high-degree neighborhoods), P (low-degree
//                       subgraph: nearest tables, pivots, and three sparse
//                       min-plus products).
//
// Estimates never underestimate: every value is the length of a witnessed
// path in G, a subgraph, or G plus a hopset/emulator overlay. Each entry
// carries a tag naming the step that produced it; tags roll up to the three
// phases for reporting.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccsp/emulator.hpp"
#include "ccsp/graph.hpp"
#include "ccsp/hopset.hpp"
#include "ccsp/ledger.hpp"

namespace ccsp {

enum class EstimateTag : std::uint8_t {
  kUnset = 0,
  kInitEdge,          // adjacency, delta = 1
  kEmulator,          // distance within the broadcast emulator
  kHighDetection,     // detection values to the high-degree hitting set S
  kHighDetour,        // min_s delta(u,s) + delta(s,v)
  kNearest,           // exact low-degree-subgraph table distances
  kNearestDetour,     // common-witness minimization over the tables
  kADetection,        // detection values to A
  kPivotDetour,       // detour through the closest A vertex in the table
  kAPrimeDetection,   // detection values to A'
  kAPrimeDetour,      // M1 * M2 product through per-vertex A' witnesses
  kTripleProduct,     // W1 * W2 * W3 low-degree-edge product
};

// 'L', 'H' or 'P' ('-' for unset).
char tag_phase(EstimateTag tag);
const char* tag_name(EstimateTag tag);

class EstimateTable {
 public:
  explicit EstimateTable(std::size_t n = 0)
      : n_(n), d_(n * n, kInfDist),
        tag_(n * n, std::uint8_t(EstimateTag::kUnset)) {
    for (std::size_t v = 0; v < n; ++v) d_[v * n + v] = 0;
  }

  std::size_t n() const { return n_; }
  Dist at(VertexId u, VertexId v) const { return d_[std::size_t(u) * n_ + v]; }
  EstimateTag tag_at(VertexId u, VertexId v) const {
    return EstimateTag(tag_[std::size_t(u) * n_ + v]);
  }

  // Keeps the entry only on strict improvement, so the tag names the
  // earliest step that reached the final value.
  bool update_min(VertexId u, VertexId v, Dist val, EstimateTag tag);

  // delta(u,v) = delta(v,u) = min of the two, keeping the winner's tag.
  void symmetrize();

 private:
  std::size_t n_;
  std::vector<Dist> d_;
  std::vector<std::uint8_t> tag_;
};

// Default emulator depth: max(2, ceil(log2 log2 n)).
unsigned default_emulator_levels(std::size_t n);

// ---------------------------------------------------------------------------
// (1 + eps, B)-APSP

struct NearAdditiveResult {
  EstimateTable est;
  double eps = 0.0;
  unsigned r = 2;
  EmulatorMode mode = EmulatorMode::kIdeal;
  double additive = 0.0;  // B for the mode used
  std::size_t emulator_edges = 0;
  bool clean = true;  // no flagged heavy vertices or hopset misses
};

// r = 0 picks default_emulator_levels(n).
NearAdditiveResult apsp_near_additive(const Graph& g, double eps, unsigned r,
                                      EmulatorMode mode, std::uint64_t seed,
                                      RoundLedger* ledger);

// ---------------------------------------------------------------------------
// (1 + eps)-MSSP

struct MsspResult {
  std::vector<VertexId> sources;
  std::vector<std::vector<Dist>> dist;  // dist[i][v] for sources[i]
  double eps = 0.0;
  Dist t = 1;           // hopset range: ceil(2 B / eps)
  Dist beta = 1;        // hopset hop bound used for detection
  double emulator_additive = 0.0;
  std::size_t emulator_edges = 0;
  std::size_t hopset_edges = 0;
  std::size_t from_detection = 0;  // entries the detection strictly improved
  bool clean = true;
};

// At most 2 sqrt(n) sources (parameter error beyond).
MsspResult mssp(const Graph& g, const std::vector<VertexId>& sources,
                double eps, EmulatorMode emulator_mode, BuildMode build_mode,
                std::uint64_t seed, RoundLedger* ledger);

struct MsspCheck {
  std::size_t checked_pairs = 0;
  std::size_t lower_violations = 0;
  std::size_t upper_violations = 0;
  double max_ratio = 0.0;
  bool ok() const { return lower_violations == 0 && upper_violations == 0; }
};

MsspCheck verify_mssp(const Graph& g, const MsspResult& res);

// Replays the charge schedule of mssp() from parameter formulas alone
// (expected set sizes, no graph needed beyond n and m); used to audit how
// charged rounds scale with n.
RoundLedger mssp_round_plan(std::size_t n, std::size_t m, double eps,
                            EmulatorMode emulator_mode = EmulatorMode::kIdeal);

// ---------------------------------------------------------------------------
// (2 + eps)-APSP

struct TwoEpsResult {
  EstimateTable est;
  double eps = 0.0;
  Dist t = 1;
  std::size_t k = 0;             // low-degree-phase table width
  std::size_t high_degree_threshold = 0;
  std::size_t low_degree_threshold = 0;  // n / k^2, floored at 1
  std::size_t s_size = 0;
  std::size_t a_size = 0;
  std::size_t aprime_size = 0;
  std::size_t gprime_edges = 0;
  std::size_t epp_edges = 0;  // low-degree-endpoint edges used by the product
  std::size_t hitting_misses = 0;  // verified misses across S, A, A'
  bool emulator_clean = true;
  bool clean() const { return hitting_misses == 0 && emulator_clean; }
};

TwoEpsResult apsp_two_eps(const Graph& g, double eps,
                          EmulatorMode emulator_mode, BuildMode build_mode,
                          std::uint64_t seed, RoundLedger* ledger);

// ---------------------------------------------------------------------------
// Estimate verification

struct ApspReport {
  std::size_t checked_pairs = 0;
  std::size_t lower_violations = 0;
  std::size_t upper_violations = 0;
  double max_ratio = 0.0;       // max delta / d over pairs with d >= 1
  double mean_ratio = 0.0;
  double max_additive_residual = 0.0;  // max delta - multiplicative * d
  std::size_t phase_l = 0;
  std::size_t phase_h = 0;
  std::size_t phase_p = 0;
  std::map<std::string, std::size_t> tag_histogram;
  bool ok() const { return lower_violations == 0 && upper_violations == 0; }
};

// Asserts d <= delta <= multiplicative * d + additive for all pairs against
// a BFS oracle; tallies tags of finite u < v pairs.
ApspReport verify_estimates(const Graph& g, const EstimateTable& est,
                            double multiplicative, double additive);

}  // namespace ccsp
