#pragma once

// Graph core: unweighted undirected graphs, weighted overlay views,
// exact distance oracles, generators, and edge-list I/O.
//
// Conventions used across the project:
//   * vertices are dense ids 0..n-1 (file labels are remapped on load),
//   * distances are unsigned with a saturating INFINITY sentinel,
//   * all randomness comes from ccsp::Rng streams labelled per use.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccsp/rng.hpp"

namespace ccsp {

using VertexId = std::uint32_t;
using Dist = std::uint64_t;

inline constexpr Dist kInfDist = ~Dist{0};

// Saturating addition; anything involving kInfDist stays kInfDist.
inline Dist dist_add(Dist a, Dist b) {
  if (a == kInfDist || b == kInfDist) return kInfDist;
  Dist s = a + b;
  return (s < a) ? kInfDist : s;
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

// Simple undirected unweighted graph. Parallel edges are merged and self
// loops rejected at insertion time.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n) {}

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }

  // Returns false (and does nothing) for duplicates and self loops.
  bool add_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  // Sorted (u,v) pairs with u < v.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t m_ = 0;
};

// ---------------------------------------------------------------------------
// Weighted overlay view
// ---------------------------------------------------------------------------

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Dist w = 1;
};

// A base graph (unit weights) plus a weighted edge overlay, presented as a
// single weighted undirected graph. Overlay weights must be >= 1 so shortest
// paths are always simple. The merged adjacency is built once.
class WeightedGraphView {
 public:
  explicit WeightedGraphView(const Graph& base,
                             const std::vector<WeightedEdge>& overlay = {});

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }

  const std::vector<std::pair<VertexId, Dist>>& neighbors(VertexId v) const {
    return adj_[v];
  }

 private:
  std::vector<std::vector<std::pair<VertexId, Dist>>> adj_;
  std::size_t m_ = 0;
};

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

// Unweighted BFS distances from src.
std::vector<Dist> bfs_from(const Graph& g, VertexId src);

// BFS cut off at the given radius; vertices beyond stay at kInfDist.
std::vector<Dist> bfs_within(const Graph& g, VertexId src, Dist radius);

// Dijkstra over a weighted view.
std::vector<Dist> dijkstra(const WeightedGraphView& gv, VertexId src);

// Minimum weight over paths that use at most hop_bound edges, from each
// source. Exact: Bellman-Ford rounds with a change-detection early exit.
// When hop_bound >= n-1 the hop constraint is vacuous (weights are positive,
// so shortest paths are simple) and Dijkstra is used instead.
std::vector<std::vector<Dist>> hop_bounded_distances(
    const WeightedGraphView& gv, const std::vector<VertexId>& sources,
    Dist hop_bound);

// Full all-pairs table from n BFS runs (or Dijkstra runs over a view).
// Instances above the cap raise CapacityError; the default cap keeps the
// table under ~512MB.
class DistanceOracle {
 public:
  static constexpr std::size_t kDefaultCap = 8192;

  static DistanceOracle exact_apsp(const Graph& g,
                                   std::size_t cap = kDefaultCap);
  static DistanceOracle exact_apsp(const WeightedGraphView& gv,
                                   std::size_t cap = kDefaultCap);

  // Hop-bounded variant: d^t(u,v) over the base graph plus overlay.
  static DistanceOracle hop_bounded(const WeightedGraphView& gv, Dist hop_bound,
                                    std::size_t cap = kDefaultCap);

  std::size_t n() const { return n_; }
  Dist at(VertexId u, VertexId v) const { return d_[std::size_t(u) * n_ + v]; }

  void dump_csv(std::ostream& out) const;

 private:
  DistanceOracle(std::size_t n) : n_(n), d_(n * n, kInfDist) {}
  std::size_t n_;
  std::vector<Dist> d_;
};

// ---------------------------------------------------------------------------
// Generators (all deterministic given the seed)
// ---------------------------------------------------------------------------

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph complete_graph(std::size_t n);
// Two cliques of size clique_n joined by a path with bridge_len edges.
Graph barbell_graph(std::size_t clique_n, std::size_t bridge_len);

// ---------------------------------------------------------------------------
// Edge-list I/O
// ---------------------------------------------------------------------------

struct LoadedGraph {
  Graph graph;
  // labels[i] is the original token for internal vertex i.
  std::vector<std::string> labels;
};

// Format: one "u v" pair per line; '#' starts a comment; blank lines are
// skipped. Labels are arbitrary tokens, remapped to dense ids in first-seen
// order. Duplicate edges are merged; self loops rejected with a parse error.
LoadedGraph load_edge_list(std::istream& in);
void save_edge_list(std::ostream& out, const Graph& g,
                    const std::vector<std::string>* labels = nullptr);

// Weighted edge list "u v w"; used for hopset and emulator dumps.
void save_weighted_edge_list(std::ostream& out,
                             const std::vector<WeightedEdge>& edges);
std::vector<WeightedEdge> load_weighted_edge_list(std::istream& in);

}  // namespace ccsp
