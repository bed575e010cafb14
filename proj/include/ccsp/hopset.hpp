#pragma once

// Bounded hopsets: weighted shortcut edges H such that for every pair at
// distance at most t in G, some path in G + H with at most beta edges has
// weight at most (1 + eps) d_G(u,v).
//
// Construction: per-vertex tables of the k nearest vertices within t
// (k = ceil(sqrt(n) log2 n)), a hitting set A1 for the full tables, bunch
// edges from every vertex up to its closest A1 pivot, then ceil(log2 t)
// rounds in which A1 vertices connect to all A1 vertices within 4 beta hops
// of the current shortcut graph. Randomized and deterministic hitting-set
// variants share everything else.

#include <cstdint>
#include <vector>

#include "ccsp/graph.hpp"
#include "ccsp/ledger.hpp"

namespace ccsp {

enum class BuildMode { kRandomized, kDeterministic };

struct HopsetParams {
  Dist t = 1;
  double eps = 0.5;
  unsigned levels = 0;  // ceil(log2 t) shortcut rounds
  Dist beta = 1;        // hop bound of the guarantee
  std::size_t k = 1;    // nearest-table size

  static HopsetParams make(std::size_t n, double eps, Dist t);
};

struct BoundedHopset {
  HopsetParams params;
  std::vector<WeightedEdge> edges;
  std::vector<VertexId> a1;
  // Vertices whose full table had no A1 member (possible only in the
  // randomized variant; the build still completes and the caller decides).
  std::vector<VertexId> missed_tables;

  bool ok() const { return missed_tables.empty(); }
};

BoundedHopset build_bounded_hopset(const Graph& g, double eps, Dist t,
                                   BuildMode mode, std::uint64_t seed,
                                   RoundLedger* ledger);

struct HopsetCheck {
  std::size_t checked_pairs = 0;
  std::size_t stretch_violations = 0;  // d^beta > (1+eps) d for some d <= t
  std::size_t lower_violations = 0;    // d^beta < d (must never happen)
  double max_ratio = 0.0;              // max d^beta / d over checked pairs
  bool size_ok = false;
  double size_bound = 0.0;
  bool ok() const {
    return stretch_violations == 0 && lower_violations == 0 && size_ok;
  }
};

// Exhaustive check of the hop-bounded guarantee against a BFS oracle, plus
// the |H| <= c_size n^{3/2} ceil(log2 n) size bound.
HopsetCheck verify_hopset(const Graph& g, const BoundedHopset& h,
                          double c_size = 4.0);

}  // namespace ccsp
