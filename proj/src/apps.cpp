#include "ccsp/apps.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "ccsp/errors.hpp"
#include "ccsp/minplus.hpp"
#include "ccsp/primitives.hpp"
#include "ccsp/rng.hpp"
#include "ccsp/softhit.hpp"

namespace ccsp {
namespace {

constexpr double kHittingConstant = 3.0;

std::vector<VertexId> build_hitting_set(const HittingFamily& family,
                                        BuildMode mode, Rng rng,
                                        RoundLedger* ledger) {
  if (mode == BuildMode::kRandomized) {
    return random_hitting_set(family, kHittingConstant, rng, ledger);
  }
  double c = kHittingConstant;
  for (;;) {
    try {
      return deterministic_hitting_set(family, c, ledger);
    } catch (const ParameterError&) {
      c += 1.0;
      if (c > 10.0) throw;
    }
  }
}

std::size_t verified_misses(const HittingFamily& family,
                            const std::vector<VertexId>& a) {
  return verify_hitting_set(family, a).missed_sets.size();
}

// Dijkstra over the emulator alone (empty base graph plus its edges).
std::vector<std::vector<Dist>> emulator_distances(
    const Emulator& em, const std::vector<VertexId>& from) {
  Graph empty(em.level_of.size());
  WeightedGraphView hview(empty, em.weighted_edges());
  std::vector<std::vector<Dist>> out;
  out.reserve(from.size());
  for (VertexId s : from) out.push_back(dijkstra(hview, s));
  return out;
}

std::vector<MatrixEntry> sorted_by_col(std::vector<MatrixEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) {
              return a.col < b.col;
            });
  return entries;
}

}  // namespace

char tag_phase(EstimateTag tag) {
  switch (tag) {
    case EstimateTag::kUnset:
      return '-';
    case EstimateTag::kEmulator:
      return 'L';
    case EstimateTag::kInitEdge:
    case EstimateTag::kHighDetection:
    case EstimateTag::kHighDetour:
      return 'H';
    default:
      return 'P';
  }
}

const char* tag_name(EstimateTag tag) {
  switch (tag) {
    case EstimateTag::kUnset: return "unset";
    case EstimateTag::kInitEdge: return "init_edge";
    case EstimateTag::kEmulator: return "emulator";
    case EstimateTag::kHighDetection: return "high_detection";
    case EstimateTag::kHighDetour: return "high_detour";
    case EstimateTag::kNearest: return "nearest";
    case EstimateTag::kNearestDetour: return "nearest_detour";
    case EstimateTag::kADetection: return "a_detection";
    case EstimateTag::kPivotDetour: return "pivot_detour";
    case EstimateTag::kAPrimeDetection: return "aprime_detection";
    case EstimateTag::kAPrimeDetour: return "aprime_detour";
    case EstimateTag::kTripleProduct: return "triple_product";
  }
  return "unset";
}

bool EstimateTable::update_min(VertexId u, VertexId v, Dist val,
                               EstimateTag tag) {
  auto idx = std::size_t(u) * n_ + v;
  if (val >= d_[idx]) return false;
  d_[idx] = val;
  tag_[idx] = std::uint8_t(tag);
  return true;
}

void EstimateTable::symmetrize() {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      auto uv = u * n_ + v;
      auto vu = v * n_ + u;
      if (d_[vu] < d_[uv]) {
        d_[uv] = d_[vu];
        tag_[uv] = tag_[vu];
      } else if (d_[uv] < d_[vu]) {
        d_[vu] = d_[uv];
        tag_[vu] = tag_[uv];
      }
    }
  }
}

unsigned default_emulator_levels(std::size_t n) {
  return std::max(2u, ceil_log2(CostModel::word_bits(n)));
}

// ---------------------------------------------------------------------------
// (1 + eps, B)-APSP

NearAdditiveResult apsp_near_additive(const Graph& g, double eps, unsigned r,
                                      EmulatorMode mode, std::uint64_t seed,
                                      RoundLedger* ledger) {
  if (r == 0) r = default_emulator_levels(g.n());
  NearAdditiveResult res;
  res.eps = eps;
  res.r = r;
  res.mode = mode;

  auto em = build_emulator(g, eps, r, mode, seed, ledger);
  res.additive = em.additive_term;
  res.emulator_edges = em.edges.size();
  res.clean = em.clean();
  if (ledger != nullptr) ledger->charge_broadcast_learn(em.edges.size());

  res.est = EstimateTable(g.n());
  Graph empty(g.n());
  WeightedGraphView hview(empty, em.weighted_edges());
  for (std::size_t u = 0; u < g.n(); ++u) {
    auto dh = dijkstra(hview, VertexId(u));
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (v == u || dh[v] == kInfDist) continue;
      res.est.update_min(VertexId(u), VertexId(v), dh[v],
                         EstimateTag::kEmulator);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// (1 + eps)-MSSP

MsspResult mssp(const Graph& g, const std::vector<VertexId>& sources,
                double eps, EmulatorMode emulator_mode, BuildMode build_mode,
                std::uint64_t seed, RoundLedger* ledger) {
  const std::size_t n = g.n();
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("mssp: eps must be in (0, 1)");
  }
  const auto cap = std::size_t(std::ceil(2.0 * std::sqrt(double(n))));
  if (sources.empty()) throw ParameterError("mssp: no sources");
  if (sources.size() > cap) {
    throw ParameterError("mssp: source set exceeds the 2 sqrt(n) cap");
  }
  for (VertexId s : sources) {
    if (std::size_t(s) >= n) throw ParameterError("mssp: source id out of range");
  }

  MsspResult res;
  res.sources = sources;
  res.eps = eps;

  const unsigned r = default_emulator_levels(n);
  auto em = build_emulator(g, eps / 2.0, r, emulator_mode,
                           Rng(seed, "mssp-emulator").next_u64(), ledger);
  res.emulator_additive = em.additive_term;
  res.emulator_edges = em.edges.size();
  if (ledger != nullptr) ledger->charge_broadcast_learn(em.edges.size());
  res.t = std::max<Dist>(1, Dist(std::ceil(2.0 * em.additive_term / eps)));

  auto hs = build_bounded_hopset(g, eps, res.t, build_mode,
                                 Rng(seed, "mssp-hopset").next_u64(), ledger);
  res.beta = hs.params.beta;
  res.hopset_edges = hs.edges.size();
  res.clean = em.clean() && hs.ok();

  WeightedGraphView view(g, hs.edges);
  auto det = source_detection(view, sources, hs.params.beta, ledger);
  auto emu = emulator_distances(em, sources);

  res.dist.assign(sources.size(), {});
  for (std::size_t i = 0; i < sources.size(); ++i) {
    res.dist[i] = emu[i];
    res.dist[i][sources[i]] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (det.dist[i][v] < res.dist[i][v]) {
        res.dist[i][v] = det.dist[i][v];
        ++res.from_detection;
      }
    }
  }
  return res;
}

MsspCheck verify_mssp(const Graph& g, const MsspResult& res) {
  MsspCheck check;
  for (std::size_t i = 0; i < res.sources.size(); ++i) {
    auto d = bfs_from(g, res.sources[i]);
    for (std::size_t v = 0; v < g.n(); ++v) {
      const Dist est = res.dist[i][v];
      if (d[v] == kInfDist) {
        if (est != kInfDist) ++check.lower_violations;
        continue;
      }
      ++check.checked_pairs;
      if (est < d[v]) {
        ++check.lower_violations;
        continue;
      }
      if (est == kInfDist ||
          double(est) > (1.0 + res.eps) * double(d[v]) + 1e-9) {
        ++check.upper_violations;
        continue;
      }
      if (d[v] >= 1) {
        check.max_ratio =
            std::max(check.max_ratio, double(est) / double(d[v]));
      }
    }
  }
  return check;
}

RoundLedger mssp_round_plan(std::size_t n, std::size_t m, double eps,
                            EmulatorMode emulator_mode) {
  RoundLedger ledger(n);
  const unsigned r = default_emulator_levels(n);
  charge_emulator_schedule(ledger, n, m, eps / 2.0, r);

  auto params = EmulatorParams::make(n, eps / 2.0, r);
  const double size_bound =
      double(r) *
      std::pow(double(n), 1.0 + 1.0 / double(std::uint64_t(1) << r));
  ledger.charge_broadcast_learn(std::size_t(std::ceil(size_bound)));

  const double b = (emulator_mode == EmulatorMode::kIdeal)
                       ? params.additive_ideal()
                       : params.additive_table();
  const Dist t = std::max<Dist>(1, Dist(std::ceil(2.0 * b / eps)));
  charge_hopset_schedule(ledger, n, m, eps, t);

  auto hp = HopsetParams::make(n, eps, t);
  const double h_edges =
      std::min(double(n) * double(n),
               std::pow(double(n), 1.5) * double(CostModel::word_bits(n)));
  const auto s = std::size_t(std::ceil(std::sqrt(double(n))));
  ledger.charge_source_detection(m + std::size_t(h_edges), s, double(hp.beta));
  return ledger;
}

// ---------------------------------------------------------------------------
// (2 + eps)-APSP

TwoEpsResult apsp_two_eps(const Graph& g, double eps,
                          EmulatorMode emulator_mode, BuildMode build_mode,
                          std::uint64_t seed, RoundLedger* ledger) {
  const std::size_t n = g.n();
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("apsp: eps must be in (0, 1)");
  }
  const std::size_t log_n = CostModel::word_bits(n);

  TwoEpsResult res;
  res.eps = eps;
  res.est = EstimateTable(n);
  auto& est = res.est;

  // Long pairs: emulator with half the budget, learned by everyone; plus the
  // init line (adjacent pairs know their distance outright).
  const unsigned r = default_emulator_levels(n);
  auto em = build_emulator(g, eps / 2.0, r, emulator_mode,
                           Rng(seed, "apsp2-emulator").next_u64(), ledger);
  res.emulator_clean = em.clean();
  if (ledger != nullptr) ledger->charge_broadcast_learn(em.edges.size());
  res.t = std::max<Dist>(1, Dist(std::ceil(2.0 * em.additive_term / eps)));
  const Dist t = res.t;

  for (auto [u, v] : g.edges()) {
    est.update_min(u, v, 1, EstimateTag::kInitEdge);
    est.update_min(v, u, 1, EstimateTag::kInitEdge);
  }
  {
    Graph empty(n);
    WeightedGraphView hview(empty, em.weighted_edges());
    for (std::size_t u = 0; u < n; ++u) {
      auto dh = dijkstra(hview, VertexId(u));
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || dh[v] == kInfDist) continue;
        est.update_min(VertexId(u), VertexId(v), dh[v],
                       EstimateTag::kEmulator);
      }
    }
  }

  // High-degree phase: hitting set S over big neighborhoods, hop-bounded
  // (1 + eps/2) distances to S, then detours through S.
  res.high_degree_threshold = std::max<std::size_t>(
      1, std::size_t(std::ceil(std::sqrt(double(n)) * double(log_n))));
  {
    HittingFamily family;
    family.universe = n;
    family.k = res.high_degree_threshold;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(VertexId(v)) >= res.high_degree_threshold) {
        family.sets.push_back(g.neighbors(VertexId(v)));
      }
    }
    auto s_set = build_hitting_set(family, build_mode, Rng(seed, "apsp2-s"),
                                   ledger);
    res.s_size = s_set.size();
    res.hitting_misses += verified_misses(family, s_set);

    auto hs = build_bounded_hopset(g, eps / 2.0, 2 * t, build_mode,
                                   Rng(seed, "apsp2-hop-g").next_u64(),
                                   ledger);
    WeightedGraphView view(g, hs.edges);
    auto det = source_detection(view, s_set, hs.params.beta, ledger);
    for (std::size_t i = 0; i < s_set.size(); ++i) {
      for (std::size_t v = 0; v < n; ++v) {
        const Dist val = det.dist[i][v];
        if (val == kInfDist || VertexId(v) == s_set[i]) continue;
        est.update_min(s_set[i], VertexId(v), val,
                       EstimateTag::kHighDetection);
        est.update_min(VertexId(v), s_set[i], val,
                       EstimateTag::kHighDetection);
      }
    }

    std::vector<std::vector<std::pair<VertexId, Dist>>> witnesses(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (VertexId s : s_set) {
        const Dist val = est.at(VertexId(v), s);
        if (val != kInfDist) witnesses[v].push_back({s, val});
      }
    }
    auto through = distance_through_sets(n, witnesses, ledger);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        const Dist val = through[u * n + v];
        if (val == kInfDist) continue;
        est.update_min(VertexId(u), VertexId(v), val,
                       EstimateTag::kHighDetour);
        est.update_min(VertexId(v), VertexId(u), val,
                       EstimateTag::kHighDetour);
      }
    }
  }

  // Low-degree phase, on the subgraph of edges touching a low-degree vertex.
  Graph gp(n);
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) <= res.high_degree_threshold ||
        g.degree(v) <= res.high_degree_threshold) {
      gp.add_edge(u, v);
    }
  }
  res.gprime_edges = gp.m();
  res.k = std::min(
      n, std::max<std::size_t>(
             1, std::size_t(std::ceil(std::pow(double(n), 0.25) *
                                      double(log_n) * double(log_n)))));
  res.low_degree_threshold = std::max<std::size_t>(
      1, std::size_t(std::ceil(double(n) / double(res.k) / double(res.k))));

  auto table = k_nearest_bounded(gp, res.k, t, ledger);
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& e : table.row(VertexId(u))) {
      if (e.col == VertexId(u)) continue;
      est.update_min(VertexId(u), e.col, e.val, EstimateTag::kNearest);
      est.update_min(e.col, VertexId(u), e.val, EstimateTag::kNearest);
    }
  }

  // Common table witnesses.
  {
    std::vector<std::vector<std::pair<VertexId, Dist>>> witnesses(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (const auto& e : table.row(VertexId(u))) {
        witnesses[u].push_back({e.col, e.val});
      }
    }
    auto through = distance_through_sets(n, witnesses, ledger);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        const Dist val = through[u * n + v];
        if (val == kInfDist) continue;
        est.update_min(VertexId(u), VertexId(v), val,
                       EstimateTag::kNearestDetour);
        est.update_min(VertexId(v), VertexId(u), val,
                       EstimateTag::kNearestDetour);
      }
    }
  }

  // Hitting set A over full tables, detection from A on G' plus its hopset.
  std::vector<bool> in_a(n, false);
  auto hs2 = build_bounded_hopset(gp, eps / 2.0, 2 * t, build_mode,
                                  Rng(seed, "apsp2-hop-gp").next_u64(),
                                  ledger);
  WeightedGraphView gp_view(gp, hs2.edges);
  {
    HittingFamily family;
    family.universe = n;
    family.k = res.k;
    for (std::size_t v = 0; v < n; ++v) {
      if (!table.full(VertexId(v)) || table.row(VertexId(v)).size() < res.k) {
        continue;
      }
      std::vector<VertexId> ids;
      ids.reserve(res.k);
      for (const auto& e : table.row(VertexId(v))) ids.push_back(e.col);
      family.sets.push_back(std::move(ids));
    }
    auto a_set = build_hitting_set(family, build_mode, Rng(seed, "apsp2-a"),
                                   ledger);
    res.a_size = a_set.size();
    res.hitting_misses += verified_misses(family, a_set);
    for (VertexId a : a_set) in_a[a] = true;

    auto det = source_detection(gp_view, a_set, hs2.params.beta, ledger);
    for (std::size_t i = 0; i < a_set.size(); ++i) {
      for (std::size_t v = 0; v < n; ++v) {
        const Dist val = det.dist[i][v];
        if (val == kInfDist || VertexId(v) == a_set[i]) continue;
        est.update_min(a_set[i], VertexId(v), val, EstimateTag::kADetection);
        est.update_min(VertexId(v), a_set[i], val, EstimateTag::kADetection);
      }
    }
  }

  // Pivot detours: each vertex routes through its closest table vertex in A.
  {
    if (ledger != nullptr) ledger->charge_flat("pivot_exchange", 1.0);
    EstimateTable snap = est;
    for (std::size_t u = 0; u < n; ++u) {
      const MatrixEntry* pivot = nullptr;
      for (const auto& e : table.row(VertexId(u))) {
        if (in_a[e.col]) {
          pivot = &e;
          break;
        }
      }
      if (pivot == nullptr) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u) continue;
        const Dist leg = snap.at(pivot->col, VertexId(v));
        if (leg == kInfDist) continue;
        const Dist val = dist_add(pivot->val, leg);
        est.update_min(VertexId(u), VertexId(v), val,
                       EstimateTag::kPivotDetour);
        est.update_min(VertexId(v), VertexId(u), val,
                       EstimateTag::kPivotDetour);
      }
    }
  }

  // Hitting set A' over low-degree-subgraph neighborhoods of degree at least
  // n/k^2, then detection from A'.
  std::vector<bool> in_aprime(n, false);
  {
    HittingFamily family;
    family.universe = n;
    family.k = res.low_degree_threshold;
    for (std::size_t v = 0; v < n; ++v) {
      if (gp.degree(VertexId(v)) >= res.low_degree_threshold) {
        family.sets.push_back(gp.neighbors(VertexId(v)));
      }
    }
    auto ap_set = build_hitting_set(family, build_mode,
                                    Rng(seed, "apsp2-aprime"), ledger);
    res.aprime_size = ap_set.size();
    res.hitting_misses += verified_misses(family, ap_set);
    for (VertexId a : ap_set) in_aprime[a] = true;

    auto det = source_detection(gp_view, ap_set, hs2.params.beta, ledger);
    for (std::size_t i = 0; i < ap_set.size(); ++i) {
      for (std::size_t v = 0; v < n; ++v) {
        const Dist val = det.dist[i][v];
        if (val == kInfDist || VertexId(v) == ap_set[i]) continue;
        est.update_min(ap_set[i], VertexId(v), val,
                       EstimateTag::kAPrimeDetection);
        est.update_min(VertexId(v), ap_set[i], val,
                       EstimateTag::kAPrimeDetection);
      }
    }
  }

  // Per-vertex A' witnesses: for every table vertex with an A' neighbor,
  // keep one such neighbor; route u -> witness -> v with one sparse product.
  {
    if (ledger != nullptr) ledger->charge_flat("neighbor_announce", 1.0);
    std::vector<VertexId> ap_neighbor(n, VertexId(n));  // n = none
    for (std::size_t v = 0; v < n; ++v) {
      VertexId best = VertexId(n);
      for (VertexId w : gp.neighbors(VertexId(v))) {
        if (in_aprime[w] && w < best) best = w;
      }
      ap_neighbor[v] = best;
    }
    MinPlusMatrix m1(n), m2(n);
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<VertexId> witnesses;
      for (const auto& e : table.row(VertexId(u))) {
        if (ap_neighbor[e.col] != VertexId(n)) {
          witnesses.push_back(ap_neighbor[e.col]);
        }
      }
      std::sort(witnesses.begin(), witnesses.end());
      witnesses.erase(std::unique(witnesses.begin(), witnesses.end()),
                      witnesses.end());
      std::vector<MatrixEntry> row;
      for (VertexId w : witnesses) {
        const Dist val = est.at(VertexId(u), w);
        if (val != kInfDist) row.push_back({w, val});
      }
      m1.set_row(VertexId(u), std::move(row));
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (!in_aprime[w]) continue;
      std::vector<MatrixEntry> row;
      for (std::size_t v = 0; v < n; ++v) {
        const Dist val = est.at(VertexId(w), VertexId(v));
        if (val != kInfDist) row.push_back({VertexId(v), val});
      }
      m2.set_row(VertexId(w), std::move(row));
    }
    if (ledger != nullptr) {
      ledger->charge_sparse_mm(std::max<std::size_t>(1, m1.max_row_size()),
                               std::max<std::size_t>(1, m2.max_row_size()));
    }
    auto prod = minplus_product(m1, m2);
    for (std::size_t u = 0; u < n; ++u) {
      for (const auto& e : prod.row(VertexId(u))) {
        if (e.col == VertexId(u)) continue;
        est.update_min(VertexId(u), e.col, e.val,
                       EstimateTag::kAPrimeDetour);
        est.update_min(e.col, VertexId(u), e.val,
                       EstimateTag::kAPrimeDetour);
      }
    }
  }

  // Low-degree-edge triple product: table hop out of u, one edge with a
  // low-degree endpoint, table hop into v.
  {
    std::vector<bool> low(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      low[v] = gp.degree(VertexId(v)) > 0 &&
               gp.degree(VertexId(v)) <= res.low_degree_threshold;
    }
    for (auto [u, v] : gp.edges()) {
      if (low[u] || low[v]) ++res.epp_edges;
    }
    MinPlusMatrix w1(n), w2(n), w3(n);
    std::vector<std::vector<MatrixEntry>> w3_rows(n);
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<MatrixEntry> row;
      for (const auto& e : table.row(VertexId(u))) {
        row.push_back(e);
        w3_rows[e.col].push_back({VertexId(u), e.val});
      }
      w1.set_row(VertexId(u), sorted_by_col(std::move(row)));
    }
    for (std::size_t v = 0; v < n; ++v) {
      w3.set_row(VertexId(v), sorted_by_col(std::move(w3_rows[v])));
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (!low[w]) continue;
      std::vector<MatrixEntry> row;
      for (VertexId nb : gp.neighbors(VertexId(w))) row.push_back({nb, 1});
      w2.set_row(VertexId(w), sorted_by_col(std::move(row)));
    }
    if (ledger != nullptr) {
      ledger->charge_sparse_mm(std::max<std::size_t>(1, w1.max_row_size()),
                               std::max<std::size_t>(1, w2.max_row_size()));
    }
    auto w12 = minplus_product(w1, w2);
    if (ledger != nullptr) {
      ledger->charge_sparse_mm(std::max<std::size_t>(1, w12.max_row_size()),
                               std::max<std::size_t>(1, w3.max_row_size()));
    }
    auto w123 = minplus_product(w12, w3);
    for (std::size_t u = 0; u < n; ++u) {
      for (const auto& e : w123.row(VertexId(u))) {
        if (e.col == VertexId(u)) continue;
        est.update_min(VertexId(u), e.col, e.val,
                       EstimateTag::kTripleProduct);
        est.update_min(e.col, VertexId(u), e.val,
                       EstimateTag::kTripleProduct);
      }
    }
  }

  est.symmetrize();
  return res;
}

// ---------------------------------------------------------------------------
// Estimate verification

ApspReport verify_estimates(const Graph& g, const EstimateTable& est,
                            double multiplicative, double additive) {
  ApspReport report;
  auto oracle = DistanceOracle::exact_apsp(g);
  double ratio_sum = 0.0;
  std::size_t ratio_count = 0;
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      const Dist d = oracle.at(VertexId(u), VertexId(v));
      const Dist val = est.at(VertexId(u), VertexId(v));
      if (d == kInfDist) {
        if (val != kInfDist) ++report.lower_violations;
        continue;
      }
      ++report.checked_pairs;
      if (val < d) {
        ++report.lower_violations;
        continue;
      }
      if (val == kInfDist ||
          double(val) > multiplicative * double(d) + additive + 1e-9) {
        ++report.upper_violations;
      }
      if (val != kInfDist) {
        report.max_additive_residual =
            std::max(report.max_additive_residual,
                     double(val) - multiplicative * double(d));
        if (d >= 1) {
          const double ratio = double(val) / double(d);
          report.max_ratio = std::max(report.max_ratio, ratio);
          ratio_sum += ratio;
          ++ratio_count;
        }
        const EstimateTag tag = est.tag_at(VertexId(u), VertexId(v));
        ++report.tag_histogram[tag_name(tag)];
        switch (tag_phase(tag)) {
          case 'L': ++report.phase_l; break;
          case 'H': ++report.phase_h; break;
          case 'P': ++report.phase_p; break;
          default: break;
        }
      }
    }
  }
  if (ratio_count > 0) report.mean_ratio = ratio_sum / double(ratio_count);
  return report;
}

}  // namespace ccsp
