#pragma once

// Row-sparse min-plus matrices, filtered squaring, and bounded k-nearest
// tables.
//
// A matrix row holds only finite entries; absent means +infinity. The
// k-nearest computation squares the adjacency matrix ceil(log2 d) times,
// filtering every row to the k smallest entries after each squaring (ties by
// smaller column id) and clamping entries larger than d to infinity. Rows of
// the result are exactly the k nearest vertices within distance d, matching a
// truncated BFS oracle entry for entry.

#include <cstdint>
#include <optional>
#include <vector>

#include "ccsp/graph.hpp"
#include "ccsp/ledger.hpp"

namespace ccsp {

struct MatrixEntry {
  VertexId col = 0;
  Dist val = 0;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Square row-sparse matrix over the (min, +) semiring.
class MinPlusMatrix {
 public:
  explicit MinPlusMatrix(std::size_t n = 0) : rows_(n) {}

  static MinPlusMatrix adjacency_with_zero_diag(const Graph& g);

  std::size_t n() const { return rows_.size(); }

  // Entries sorted by column id.
  const std::vector<MatrixEntry>& row(VertexId u) const { return rows_[u]; }

  // Replaces the row; entries must be sorted by column, finite, unique.
  void set_row(VertexId u, std::vector<MatrixEntry> entries);

  std::optional<Dist> at(VertexId u, VertexId v) const;

  std::size_t max_row_size() const;

  friend bool operator==(const MinPlusMatrix&, const MinPlusMatrix&) = default;

 private:
  std::vector<std::vector<MatrixEntry>> rows_;
};

// C[u][w] = min_c (A[u][c] + B[c][w]) over finite entries.
MinPlusMatrix minplus_product(const MinPlusMatrix& a, const MinPlusMatrix& b);

// Keeps the rho smallest entries per row; ties broken by smaller column id.
MinPlusMatrix filter_rows(const MinPlusMatrix& m, std::size_t rho);

// Drops entries with value > limit.
MinPlusMatrix clamp_above(const MinPlusMatrix& m, Dist limit);

// Per-vertex nearest list sorted by (distance, vertex id); includes the
// vertex itself at distance 0.
class NearestTable {
 public:
  NearestTable(std::size_t n, std::size_t k) : k_(k), rows_(n) {}

  std::size_t n() const { return rows_.size(); }
  std::size_t k() const { return k_; }

  const std::vector<MatrixEntry>& row(VertexId v) const { return rows_[v]; }
  std::vector<MatrixEntry>& mutable_row(VertexId v) { return rows_[v]; }

  bool full(VertexId v) const { return rows_[v].size() == k_; }

  std::optional<Dist> distance_to(VertexId v, VertexId target) const;

  // Number of entries with value <= radius (rows are sorted by value).
  std::size_t count_within(VertexId v, Dist radius) const;

 private:
  std::size_t k_;
  std::vector<std::vector<MatrixEntry>> rows_;
};

// The k nearest vertices within distance d for every vertex, by filtered
// min-plus squaring. Charges ceil(log2 d) filtered-product rounds to the
// ledger (the full schedule, even when the matrix reaches its fixpoint
// early). Pass ledger = nullptr to skip bookkeeping.
NearestTable k_nearest_bounded(const Graph& g, std::size_t k, Dist d,
                               RoundLedger* ledger);

// ceil(log2 x) for x >= 1.
inline unsigned ceil_log2(std::uint64_t x) {
  unsigned b = 0;
  while ((std::uint64_t(1) << b) < x) ++b;
  return b;
}

}  // namespace ccsp
