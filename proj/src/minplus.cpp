#include "ccsp/minplus.hpp"

#include <algorithm>

#include "ccsp/errors.hpp"

namespace ccsp {

MinPlusMatrix MinPlusMatrix::adjacency_with_zero_diag(const Graph& g) {
  MinPlusMatrix m(g.n());
  for (VertexId u = 0; u < g.n(); ++u) {
    std::vector<MatrixEntry> row;
    row.reserve(g.degree(u) + 1);
    row.push_back({u, 0});
    for (VertexId v : g.neighbors(u)) row.push_back({v, 1});
    std::sort(row.begin(), row.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) {
                return a.col < b.col;
              });
    m.rows_[u] = std::move(row);
  }
  return m;
}

void MinPlusMatrix::set_row(VertexId u, std::vector<MatrixEntry> entries) {
  rows_[u] = std::move(entries);
}

std::optional<Dist> MinPlusMatrix::at(VertexId u, VertexId v) const {
  const auto& r = rows_[u];
  auto it = std::lower_bound(r.begin(), r.end(), v,
                             [](const MatrixEntry& e, VertexId col) {
                               return e.col < col;
                             });
  if (it != r.end() && it->col == v) return it->val;
  return std::nullopt;
}

std::size_t MinPlusMatrix::max_row_size() const {
  std::size_t mx = 0;
  for (const auto& r : rows_) mx = std::max(mx, r.size());
  return mx;
}

MinPlusMatrix minplus_product(const MinPlusMatrix& a, const MinPlusMatrix& b) {
  if (a.n() != b.n()) throw ParameterError("minplus_product: size mismatch");
  const std::size_t n = a.n();
  MinPlusMatrix c(n);
  std::vector<Dist> acc(n, kInfDist);
  std::vector<VertexId> touched;
  touched.reserve(256);
  for (VertexId u = 0; u < n; ++u) {
    for (const auto& e : a.row(u)) {
      for (const auto& f : b.row(e.col)) {
        Dist nv = e.val + f.val;  // finite entries only, no overflow at scale
        if (nv < acc[f.col]) {
          if (acc[f.col] == kInfDist) touched.push_back(f.col);
          acc[f.col] = nv;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<MatrixEntry> row;
    row.reserve(touched.size());
    for (VertexId w : touched) {
      row.push_back({w, acc[w]});
      acc[w] = kInfDist;
    }
    touched.clear();
    c.set_row(u, std::move(row));
  }
  return c;
}

MinPlusMatrix filter_rows(const MinPlusMatrix& m, std::size_t rho) {
  MinPlusMatrix out(m.n());
  for (VertexId u = 0; u < m.n(); ++u) {
    std::vector<MatrixEntry> row = m.row(u);
    if (row.size() > rho) {
      std::nth_element(row.begin(), row.begin() + rho, row.end(),
                       [](const MatrixEntry& a, const MatrixEntry& b) {
                         return a.val != b.val ? a.val < b.val : a.col < b.col;
                       });
      row.resize(rho);
      std::sort(row.begin(), row.end(),
                [](const MatrixEntry& a, const MatrixEntry& b) {
                  return a.col < b.col;
                });
    }
    out.set_row(u, std::move(row));
  }
  return out;
}

MinPlusMatrix clamp_above(const MinPlusMatrix& m, Dist limit) {
  MinPlusMatrix out(m.n());
  for (VertexId u = 0; u < m.n(); ++u) {
    std::vector<MatrixEntry> row;
    row.reserve(m.row(u).size());
    for (const auto& e : m.row(u))
      if (e.val <= limit) row.push_back(e);
    out.set_row(u, std::move(row));
  }
  return out;
}

std::optional<Dist> NearestTable::distance_to(VertexId v,
                                              VertexId target) const {
  for (const auto& e : rows_[v])
    if (e.col == target) return e.val;
  return std::nullopt;
}

std::size_t NearestTable::count_within(VertexId v, Dist radius) const {
  const auto& r = rows_[v];
  std::size_t c = 0;
  while (c < r.size() && r[c].val <= radius) ++c;
  return c;
}

NearestTable k_nearest_bounded(const Graph& g, std::size_t k, Dist d,
                               RoundLedger* ledger) {
  if (k == 0) throw ParameterError("k_nearest_bounded: k must be >= 1");
  if (d == 0) throw ParameterError("k_nearest_bounded: d must be >= 1");

  MinPlusMatrix cur =
      filter_rows(clamp_above(MinPlusMatrix::adjacency_with_zero_diag(g), d), k);

  const unsigned iterations = ceil_log2(d);
  bool converged = false;
  for (unsigned t = 0; t < iterations; ++t) {
    // The charge follows the full squaring schedule; local computation stops
    // once the matrix reaches its fixpoint.
    if (ledger) ledger->charge_filtered_mm(k, k, k, double(d));
    if (converged) continue;
    MinPlusMatrix next =
        filter_rows(clamp_above(minplus_product(cur, cur), d), k);
    if (next == cur) {
      converged = true;
    } else {
      cur = std::move(next);
    }
  }

  NearestTable table(g.n(), k);
  for (VertexId v = 0; v < g.n(); ++v) {
    std::vector<MatrixEntry> row = cur.row(v);
    std::sort(row.begin(), row.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) {
                return a.val != b.val ? a.val < b.val : a.col < b.col;
              });
    table.mutable_row(v) = std::move(row);
  }
  return table;
}

}  // namespace ccsp
