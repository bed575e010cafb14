#pragma once

// Congested-clique toolkit primitives, computed centrally with their round
// costs charged to the ledger:
//
//   * source detection: hop-bounded distances from a source set,
//   * distance-through-sets: best two-leg distance via shared witnesses,
//   * randomized hitting sets for families of large vertex sets.
//
// The deterministic hitting set lives in softhit (it shares the conditional
// expectation machinery).

#include <cstdint>
#include <vector>

#include "ccsp/graph.hpp"
#include "ccsp/ledger.hpp"
#include "ccsp/rng.hpp"

namespace ccsp {

// ---------------------------------------------------------------------------
// Source detection
// ---------------------------------------------------------------------------

struct SourceDetectionResult {
  std::vector<VertexId> sources;
  // dist[i][v] = weight of the best path from sources[i] to v using at most
  // the hop bound's edges; kInfDist when unreachable within the bound.
  std::vector<std::vector<Dist>> dist;

  Dist at(std::size_t source_index, VertexId v) const {
    return dist[source_index][v];
  }
};

// Hop-bounded distances from every source over base + overlay. Charges
// (m^{1/3} s^{2/3} / n + 1) * hop_bound rounds.
SourceDetectionResult source_detection(const WeightedGraphView& gv,
                                       const std::vector<VertexId>& sources,
                                       Dist hop_bound, RoundLedger* ledger);

// ---------------------------------------------------------------------------
// Distance through witness sets
// ---------------------------------------------------------------------------

// witnesses[v] lists (w, delta(v,w)) pairs. Returns the flattened n*n matrix
// D with D[u*n+v] = min over shared witnesses w of delta(u,w) + delta(w,v).
// Entries with no shared witness are kInfDist. Witness distances are treated
// as symmetric estimates. Charges rho^{2/3}/n^{1/3} + 1 rounds where rho is
// the largest witness list.
std::vector<Dist> distance_through_sets(
    std::size_t n,
    const std::vector<std::vector<std::pair<VertexId, Dist>>>& witnesses,
    RoundLedger* ledger);

// ---------------------------------------------------------------------------
// Hitting sets
// ---------------------------------------------------------------------------

// A family of vertex sets, each of size >= k, to be hit by one set A.
struct HittingFamily {
  std::size_t universe = 0;           // vertices are 0..universe-1
  std::size_t k = 1;                  // guaranteed minimum set size
  std::vector<std::vector<VertexId>> sets;
};

// Samples every vertex independently with p = min(1, c ln(universe) / k).
// One announcement round is charged. With c > 2 each set is hit with
// probability 1 - universe^{-c}; misses are possible and must be checked by
// the caller via verify_hitting_set.
std::vector<VertexId> random_hitting_set(const HittingFamily& family, double c,
                                         Rng& rng, RoundLedger* ledger);

struct HittingReport {
  std::vector<std::size_t> missed_sets;  // indices into family.sets
  std::size_t size = 0;                  // |A|
  bool ok() const { return missed_sets.empty(); }
};

HittingReport verify_hitting_set(const HittingFamily& family,
                                 const std::vector<VertexId>& a);

}  // namespace ccsp
