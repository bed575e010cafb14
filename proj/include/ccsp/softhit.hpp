#pragma once

// Soft hitting sets and derandomization by conditional expectations.
//
// An instance is a universe R of N items, a density parameter Delta, and a
// family of holder sets T_v subseteq R with |T_v| >= Delta. The soft-hit
// value SH(T, Z) is 0 when T intersects Z and |T| otherwise. The goal is a
// Z subseteq R that is simultaneously small and leaves little total soft-hit
// mass:
//
//   cost(Z) = |Z| + chi * sum_v SH(T_v, Z),   chi = N / (Delta^2 * |L|),
//
// where L is the holder list (chi = 0 when L is empty). Membership is decided
// by a hash h: each item owns a block of ell = floor(log2 Delta) seed bits
// and h(item) = AND of its block; Z = { i in R : h(i) = 1 }. A uniformly
// random seed gives E[cost] < (2 + 1/e) * N / Delta, so the derandomized Z
// (whose cost never exceeds that expectation) has |Z| < 3 N / Delta. That
// factor is exported as kSoftHitSizeConstant and is a hard guarantee, not a
// tail bound.
//
// Seed modes:
//   independent-bits: the seed is the N*ell hash bits themselves; conditional
//     expectations have an exact closed form.
//   small-seed: the seed is r <= 20 bits expanded by a pluggable generator;
//     conditional expectations are computed exactly by enumerating all
//     completions of the unfixed seed bits.
//   (Monte Carlo sampling of seeds is offered for comparison experiments.)
//
// The derandomizer fixes the seed chunk by chunk (floor(log2 N) bits at a
// time), choosing the chunk value minimizing the conditional expectation,
// ties to the smallest value. The invariant cost(Z_final) <= E[cost | empty
// prefix] holds for any generator by the law of total expectation.
//
// The deterministic hitting set for families of size >= k sets reuses the
// same method with the pessimistic estimator
//   E[|A|]/(3 p n) + sum_v n^{c-1} P[S_v cap A = empty],
// and fails fast with a parameter error when the estimator is not < 1 at the
// root (remedied by a larger c).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "ccsp/ledger.hpp"
#include "ccsp/primitives.hpp"
#include "ccsp/rng.hpp"

namespace ccsp {

// Hard bound on |Z| relative to N/Delta for derandomized independent-bits
// runs (see header comment for the derivation).
inline constexpr double kSoftHitSizeConstant = 3.0;

struct SoftHitInstance {
  std::size_t universe = 0;  // N; items are 0..N-1
  double delta = 1.0;        // Delta >= 1
  std::vector<std::vector<std::uint32_t>> holders;  // each |T_v| >= Delta

  // Throws ParameterError on malformed instances.
  void validate() const;

  // Bits per item block: floor(log2 Delta); 0 means h == 1 identically.
  unsigned block_bits() const;

  double chi() const;
};

/// SH(T, Z): 0 if they intersect, |T| otherwise.
std::size_t sh_value(const std::vector<std::uint32_t>& t,
                     const std::vector<char>& z_mask);

// h(item) under the given seed bits: AND of the item's block.
bool evaluate_hash(const std::vector<char>& seed_bits, std::uint32_t item,
                   unsigned ell);

// Z for a fully specified seed.
std::vector<std::uint32_t> hash_select(const SoftHitInstance& inst,
                                       const std::vector<char>& seed_bits);

double soft_hit_cost(const SoftHitInstance& inst,
                     const std::vector<std::uint32_t>& z);

// Exact E[cost] in independent-bits mode given a partial assignment
// (-1 unfixed, 0/1 fixed) of the N*ell hash bits.
double conditional_cost_expectation(const SoftHitInstance& inst,
                                    const std::vector<signed char>& bits);

struct DerandResult {
  std::vector<std::uint32_t> z;
  double final_cost = 0.0;
  double initial_expectation = 0.0;
  // Conditional expectation after each committed chunk (non-increasing).
  std::vector<double> expectation_trace;
};

// Independent-bits derandomization. Charges one announcement round plus one
// round per seed chunk.
DerandResult derandomize_soft_hitting(const SoftHitInstance& inst,
                                      RoundLedger* ledger);

/// Small-seed mode: seed_bits <= 20; expand(seed, i) is the i-th hash bit
// under that seed. Exhaustive enumeration keeps expectations exact.
struct SmallSeedGenerator {
  unsigned seed_bits = 16;
  std::function<bool(std::uint64_t seed, std::uint64_t bit_index)> expand;
};

// A fixed splitmix-based expander, used by tests and the CLI.
SmallSeedGenerator default_small_seed_generator(unsigned seed_bits);

DerandResult derandomize_soft_hitting_small_seed(
    const SoftHitInstance& inst, const SmallSeedGenerator& gen,
    RoundLedger* ledger);

// Best-of-trials random seeds; no guarantee, comparison only.
DerandResult monte_carlo_soft_hitting(const SoftHitInstance& inst,
                                      std::size_t trials, Rng& rng);

struct SoftHitCheck {
  bool size_ok = false;
  bool mass_ok = false;
  std::size_t z_size = 0;
  std::size_t sh_mass = 0;
  double size_bound = 0.0;
  double mass_bound = 0.0;
  bool ok() const { return size_ok && mass_ok; }
};

// |Z| <= c_size * N / Delta and total SH mass <= c_mass * |L| * Delta.
SoftHitCheck verify_soft_hitting(const SoftHitInstance& inst,
                                 const std::vector<std::uint32_t>& z,
                                 double c_size, double c_mass);

// ---------------------------------------------------------------------------
// Deterministic hitting set
// ---------------------------------------------------------------------------

// Zero-miss hitting set by conditional expectations over the sampling
// process with p = min(1, c ln(universe) / k). Throws ParameterError when
// the pessimistic estimator is >= 1 before any bit is fixed (increase c).
// Guarantees |A| < 3 c universe ln(universe) / k and every set hit.
std::vector<VertexId> deterministic_hitting_set(const HittingFamily& family,
                                                double c, RoundLedger* ledger);

// ---------------------------------------------------------------------------
// Instance serialization (JSON)
// ---------------------------------------------------------------------------

void dump_soft_hit_instance(std::ostream& out, const SoftHitInstance& inst);
SoftHitInstance load_soft_hit_instance(std::istream& in);

}  // namespace ccsp
