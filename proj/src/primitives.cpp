#include "ccsp/primitives.hpp"

#include <algorithm>
#include <cmath>

#include "ccsp/errors.hpp"

namespace ccsp {

SourceDetectionResult source_detection(const WeightedGraphView& gv,
                                       const std::vector<VertexId>& sources,
                                       Dist hop_bound, RoundLedger* ledger) {
  if (ledger)
    ledger->charge_source_detection(gv.m(), sources.size(),
                                    double(hop_bound));
  SourceDetectionResult res;
  res.sources = sources;
  res.dist = hop_bounded_distances(gv, sources, hop_bound);
  return res;
}

std::vector<Dist> distance_through_sets(
    std::size_t n,
    const std::vector<std::vector<std::pair<VertexId, Dist>>>& witnesses,
    RoundLedger* ledger) {
  if (witnesses.size() != n)
    throw ParameterError("distance_through_sets: witness list size mismatch");

  std::size_t rho = 0;
  for (const auto& w : witnesses) rho = std::max(rho, w.size());
  if (ledger) ledger->charge_distance_through(rho);

  // Regroup by witness: holders[w] = vertices that list w, with their
  // distance to w.
  std::vector<std::vector<std::pair<VertexId, Dist>>> holders(n);
  for (VertexId v = 0; v < n; ++v)
    for (auto [w, d] : witnesses[v]) {
      if (w >= n) throw ParameterError("distance_through_sets: witness id");
      holders[w].emplace_back(v, d);
    }

  std::vector<Dist> out(n * n, kInfDist);
  for (VertexId w = 0; w < n; ++w) {
    const auto& h = holders[w];
    for (std::size_t i = 0; i < h.size(); ++i) {
      auto [u, du] = h[i];
      for (std::size_t j = i; j < h.size(); ++j) {
        auto [v, dv] = h[j];
        Dist cand = dist_add(du, dv);
        std::size_t uv = std::size_t(u) * n + v;
        std::size_t vu = std::size_t(v) * n + u;
        if (cand < out[uv]) out[uv] = cand;
        if (cand < out[vu]) out[vu] = cand;
      }
    }
  }
  return out;
}

std::vector<VertexId> random_hitting_set(const HittingFamily& family, double c,
                                         Rng& rng, RoundLedger* ledger) {
  if (family.universe == 0) throw ParameterError("hitting set: empty universe");
  if (family.k == 0) throw ParameterError("hitting set: k must be >= 1");
  double p = std::min(
      1.0, c * std::log(double(family.universe)) / double(family.k));
  std::vector<VertexId> a;
  for (VertexId v = 0; v < family.universe; ++v)
    if (rng.bernoulli(p)) a.push_back(v);
  if (ledger) ledger->charge_flat("hitting_set_announce", 1.0);
  return a;
}

HittingReport verify_hitting_set(const HittingFamily& family,
                                 const std::vector<VertexId>& a) {
  std::vector<char> in_a(family.universe, 0);
  for (VertexId v : a) in_a[v] = 1;
  HittingReport rep;
  rep.size = a.size();
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    bool hit = false;
    for (VertexId v : family.sets[i])
      if (in_a[v]) {
        hit = true;
        break;
      }
    if (!hit) rep.missed_sets.push_back(i);
  }
  return rep;
}

}  // namespace ccsp
