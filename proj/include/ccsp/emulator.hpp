#pragma once

// Near-additive emulators: a sparse weighted graph H on V(G) with
//   d_G(u,v) <= d_H(u,v) <= (1 + eps_user) d_G(u,v) + B
// for all pairs, built from a sampled (or derandomized) level hierarchy
// S_0 = V >= S_1 >= ... >= S_r, S_{r+1} = empty.
//
// Per level i, a vertex whose top level is i either links to its closest
// S_{i+1} vertex within delta_i (dense) or connects to every S_i vertex in
// that ball (sparse); top-level vertices are tied together by edges between
// all S_r pairs within delta_r. The internal epsilon is eps_user/(80(r-1)),
// which absorbs both the per-level multiplicative loss and the approximation
// of the top-level edges.
//
// Modes:
//   ideal          exact balls, exact top-level edges; B = beta_r.
//   clique         every decision made from k-nearest tables (k = n^{2/3});
//                  top-level edges carry (1+eps') hop-bounded weights from a
//                  bounded hopset; heavy vertices whose table lacks a top-
//                  level vertex are flagged. B = 2 beta_r.
//   clique_whp     ceil(4 log2 n) independent level samplings; picks the run
//                  with the fewest non-top edges among those whose top level
//                  is small and covers every heavy table. B = 2 beta_r.
//   deterministic  levels thinned by derandomized soft hitting sets, heavy
//                  tables covered by a deterministic hitting set, top-level
//                  stage on a deterministic hopset. Bit-for-bit reproducible,
//                  never flags. B = 2 beta_r.
//
// The ledger is charged with the table-based schedule in every mode, so
// pipeline round totals are comparable across modes.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ccsp/graph.hpp"
#include "ccsp/ledger.hpp"

namespace ccsp {

enum class EmulatorMode { kIdeal, kClique, kCliqueWhp, kDeterministic };

const char* emulator_mode_name(EmulatorMode mode);

struct EmulatorParams {
  std::size_t n = 0;
  double eps_user = 0.5;
  unsigned r = 2;
  double eps0 = 0.0;       // eps_user / (80 (r-1)), must stay below 1/10
  double eps_prime = 0.0;  // top-level hopset epsilon: 20 eps0 (r-1)
  std::vector<double> p;       // sampling probabilities, p[1..r]
  std::vector<double> delta;   // ball radii, delta[0..r]
  std::vector<double> r_sum;   // cumulative radii R_i = sum_{j<i} delta_j
  std::vector<double> beta;    // additive terms per level
  std::vector<Dist> radius;    // ceil(delta_i), used for BFS/table cutoffs

  double additive_ideal() const { return beta[r]; }
  double additive_table() const { return 2.0 * beta[r]; }

  static EmulatorParams make(std::size_t n, double eps_user, unsigned r);
};

enum class EmulatorRule : std::uint8_t { kDenseLink, kSparseClique, kTopLevel };

struct EmulatorEdge {
  VertexId u = 0;
  VertexId v = 0;
  Dist w = 1;
  unsigned level = 0;
  EmulatorRule rule = EmulatorRule::kDenseLink;
};

struct VertexRecord {
  unsigned level = 0;   // i_v, the vertex's top level
  bool heavy = false;   // ball at its level larger than the table can hold
  bool dense = false;   // emitted a dense link
  VertexId link = 0;    // dense link target, valid when dense
  Dist link_dist = 0;
};

struct Emulator {
  EmulatorParams params;
  EmulatorMode mode = EmulatorMode::kIdeal;
  std::vector<unsigned> level_of;  // i_v per vertex
  std::vector<VertexRecord> records;
  std::vector<EmulatorEdge> edges;  // deduplicated, u < v
  double additive_term = 0.0;       // B for this mode

  // Diagnostics.
  std::vector<VertexId> flagged_heavy;  // table lacked a top-level hit
  std::vector<VertexId> hopset_misses;  // top-level hopset table misses
  std::size_t whp_selected_run = 0;
  std::size_t whp_considered_runs = 0;
  std::vector<std::size_t> sprime_sizes;  // deterministic: |S'_i| per level
  std::vector<VertexId> det_a;            // deterministic: extra top set A

  bool clean() const { return flagged_heavy.empty() && hopset_misses.empty(); }

  std::vector<VertexId> level_members(unsigned i) const;
  std::vector<WeightedEdge> weighted_edges() const;
};

Emulator build_emulator(const Graph& g, double eps_user, unsigned r,
                        EmulatorMode mode, std::uint64_t seed,
                        RoundLedger* ledger);

struct EmulatorCheck {
  std::size_t checked_pairs = 0;
  std::size_t stretch_violations = 0;
  std::size_t lower_violations = 0;
  double max_mult_ratio = 0.0;   // max d_H/d over pairs with d >= 1
  double worst_slack = 0.0;      // max d_H - ((1+eps)d + B), <= 0 when ok
  std::size_t edge_count = 0;
  double size_ratio = 0.0;       // |E(H)| / (r n^{1+1/2^r})
  bool ok() const { return stretch_violations == 0 && lower_violations == 0; }
};

// All-pairs check of both stretch inequalities against a BFS oracle.
EmulatorCheck verify_emulator(const Graph& g, const Emulator& em);

// One line per edge: "u v w level rule".
void dump_emulator(std::ostream& out, const Emulator& em);

// The table-based round schedule, evaluated from parameter formulas only
// (expected set sizes); shared by ideal-mode charging and pipeline planning.
void charge_emulator_schedule(RoundLedger& ledger, std::size_t n,
                              std::size_t m, double eps_user, unsigned r);

// Same idea for a hopset build: charges tables, hitting-set announcement and
// the shortcut rounds with expected sizes.
void charge_hopset_schedule(RoundLedger& ledger, std::size_t n, std::size_t m,
                            double eps, Dist t);

}  // namespace ccsp
