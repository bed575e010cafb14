#include "ccsp/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "ccsp/errors.hpp"

namespace ccsp {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

bool Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) return false;
  if (u >= n() || v >= n()) throw ParameterError("add_edge: vertex out of range");
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
  return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId t = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), t) != a.end();
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// WeightedGraphView
// ---------------------------------------------------------------------------

WeightedGraphView::WeightedGraphView(const Graph& base,
                                     const std::vector<WeightedEdge>& overlay)
    : adj_(base.n()) {
  for (VertexId u = 0; u < base.n(); ++u) {
    adj_[u].reserve(base.degree(u));
    for (VertexId v : base.neighbors(u)) adj_[u].emplace_back(v, Dist{1});
  }
  m_ = base.m();
  for (const auto& e : overlay) {
    if (e.u == e.v) throw ParameterError("overlay self loop");
    if (e.u >= n() || e.v >= n())
      throw ParameterError("overlay vertex out of range");
    if (e.w < 1) throw ParameterError("overlay weight must be >= 1");
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
    ++m_;
  }
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

std::vector<Dist> bfs_from(const Graph& g, VertexId src) {
  return bfs_within(g, src, kInfDist);
}

std::vector<Dist> bfs_within(const Graph& g, VertexId src, Dist radius) {
  std::vector<Dist> dist(g.n(), kInfDist);
  dist[src] = 0;
  std::deque<VertexId> q{src};
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    if (dist[u] >= radius) continue;  // neighbors would exceed the radius
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == kInfDist) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<Dist> dijkstra(const WeightedGraphView& gv, VertexId src) {
  std::vector<Dist> dist(gv.n(), kInfDist);
  using Item = std::pair<Dist, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[src] = 0;
  pq.emplace(0, src);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (auto [v, w] : gv.neighbors(u)) {
      Dist nd = dist_add(d, w);
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  return dist;
}

namespace {

// One-source hop-bounded Bellman-Ford with early exit once a round changes
// nothing (the hop-h table is then the fixpoint for all larger h).
std::vector<Dist> hop_bounded_single(const WeightedGraphView& gv, VertexId src,
                                     Dist hop_bound) {
  std::vector<Dist> cur(gv.n(), kInfDist);
  cur[src] = 0;
  std::vector<VertexId> frontier{src};
  std::vector<char> in_next(gv.n(), 0);
  for (Dist round = 0; round < hop_bound && !frontier.empty(); ++round) {
    std::vector<VertexId> next;
    for (VertexId u : frontier) {
      Dist du = cur[u];
      for (auto [v, w] : gv.neighbors(u)) {
        Dist nd = dist_add(du, w);
        if (nd < cur[v]) {
          cur[v] = nd;
          if (!in_next[v]) {
            in_next[v] = 1;
            next.push_back(v);
          }
        }
      }
    }
    for (VertexId v : next) in_next[v] = 0;
    frontier = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<std::vector<Dist>> hop_bounded_distances(
    const WeightedGraphView& gv, const std::vector<VertexId>& sources,
    Dist hop_bound) {
  std::vector<std::vector<Dist>> out;
  out.reserve(sources.size());
  const bool unconstrained = gv.n() == 0 || hop_bound >= Dist(gv.n() - 1);
  for (VertexId s : sources) {
    out.push_back(unconstrained ? dijkstra(gv, s)
                                : hop_bounded_single(gv, s, hop_bound));
  }
  return out;
}

DistanceOracle DistanceOracle::exact_apsp(const Graph& g, std::size_t cap) {
  if (g.n() > cap) throw CapacityError("exact_apsp: n exceeds oracle cap");
  DistanceOracle o(g.n());
  for (VertexId s = 0; s < g.n(); ++s) {
    auto row = bfs_from(g, s);
    std::copy(row.begin(), row.end(), o.d_.begin() + std::size_t(s) * g.n());
  }
  return o;
}

DistanceOracle DistanceOracle::exact_apsp(const WeightedGraphView& gv,
                                          std::size_t cap) {
  if (gv.n() > cap) throw CapacityError("exact_apsp: n exceeds oracle cap");
  DistanceOracle o(gv.n());
  for (VertexId s = 0; s < gv.n(); ++s) {
    auto row = dijkstra(gv, s);
    std::copy(row.begin(), row.end(), o.d_.begin() + std::size_t(s) * gv.n());
  }
  return o;
}

DistanceOracle DistanceOracle::hop_bounded(const WeightedGraphView& gv,
                                           Dist hop_bound, std::size_t cap) {
  if (gv.n() > cap) throw CapacityError("hop_bounded: n exceeds oracle cap");
  DistanceOracle o(gv.n());
  std::vector<VertexId> all(gv.n());
  for (VertexId v = 0; v < gv.n(); ++v) all[v] = v;
  auto rows = hop_bounded_distances(gv, all, hop_bound);
  for (VertexId s = 0; s < gv.n(); ++s)
    std::copy(rows[s].begin(), rows[s].end(),
              o.d_.begin() + std::size_t(s) * gv.n());
  return o;
}

void DistanceOracle::dump_csv(std::ostream& out) const {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (v) out << ',';
      Dist d = d_[u * n_ + v];
      if (d == kInfDist)
        out << "INF";
      else
        out << d;
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw ParameterError("gnp: p outside [0,1]");
  Graph g(n);
  Rng rng(seed, "gnp");
  for (VertexId u = 0; u + 1 < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(VertexId(n - 1), 0);
  return g;
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  Graph g(rows * cols);
  auto id = [cols](std::size_t r, std::size_t c) {
    return VertexId(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u + 1 < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph barbell_graph(std::size_t clique_n, std::size_t bridge_len) {
  // Vertices: [0, clique_n) left clique, [clique_n, 2*clique_n) right clique,
  // then bridge_len - 1 interior path vertices.
  std::size_t n = 2 * clique_n + (bridge_len > 0 ? bridge_len - 1 : 0);
  Graph g(n);
  for (VertexId u = 0; u + 1 < clique_n; ++u)
    for (VertexId v = u + 1; v < clique_n; ++v) g.add_edge(u, v);
  for (VertexId u = 0; u + 1 < clique_n; ++u)
    for (VertexId v = u + 1; v < clique_n; ++v)
      g.add_edge(VertexId(clique_n + u), VertexId(clique_n + v));
  if (clique_n == 0) return g;
  // Path from vertex 0 (left) to vertex clique_n (right).
  VertexId prev = 0;
  for (std::size_t i = 0; i + 1 < bridge_len; ++i) {
    VertexId mid = VertexId(2 * clique_n + i);
    g.add_edge(prev, mid);
    prev = mid;
  }
  if (bridge_len > 0) g.add_edge(prev, VertexId(clique_n));
  return g;
}

// ---------------------------------------------------------------------------
// I/O
// ---------------------------------------------------------------------------

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::unordered_map<std::string, VertexId> remap;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& tok) {
    auto it = remap.find(tok);
    if (it != remap.end()) return it->second;
    VertexId id = VertexId(labels.size());
    remap.emplace(tok, id);
    labels.push_back(tok);
    return id;
  };

  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b) || (ls >> extra))
      throw UsageError("edge list line " + std::to_string(lineno) +
                       ": expected exactly two tokens");
    VertexId u = intern(a), v = intern(b);
    if (u == v)
      throw UsageError("edge list line " + std::to_string(lineno) +
                       ": self loop");
    edges.emplace_back(u, v);
  }

  LoadedGraph out{Graph(labels.size()), std::move(labels)};
  for (auto [u, v] : edges) out.graph.add_edge(u, v);  // duplicates merge
  return out;
}

void save_edge_list(std::ostream& out, const Graph& g,
                    const std::vector<std::string>* labels) {
  out << "# " << g.n() << " vertices, " << g.m() << " edges\n";
  for (auto [u, v] : g.edges()) {
    if (labels)
      out << (*labels)[u] << ' ' << (*labels)[v] << '\n';
    else
      out << u << ' ' << v << '\n';
  }
}

void save_weighted_edge_list(std::ostream& out,
                             const std::vector<WeightedEdge>& edges) {
  out << "# " << edges.size() << " weighted edges\n";
  for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

std::vector<WeightedEdge> load_weighted_edge_list(std::istream& in) {
  std::vector<WeightedEdge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::uint64_t u, v, w;
    if (!(ls >> u)) continue;
    if (!(ls >> v >> w))
      throw UsageError("weighted edge list line " + std::to_string(lineno) +
                       ": expected three numbers");
    edges.push_back({VertexId(u), VertexId(v), Dist(w)});
  }
  return edges;
}

}  // namespace ccsp
