#pragma once

// Round ledger: communication-cost bookkeeping.
//
// Nothing here simulates message passing. Each congested-clique primitive the
// algorithms invoke charges a closed-form round cost, parameterized by the
// instance sizes it was invoked with, so end-to-end round totals and their
// per-primitive breakdown can be audited and compared across n.
//
// Cost formulas (rounds, before the per-primitive unit constant):
//   source detection:   (m^{1/3} s^{2/3} / n + 1) * d
//   filtered min-plus:  (rho_S rho_T rho)^{1/3} / n^{2/3} + log2(W)
//   sparse min-plus:    (rho_S rho_T)^{1/3} / n^{1/3} + 1
//   distance-through:   rho^{2/3} / n^{1/3} + 1
//   broadcast + learn:  2 * ceil(words / n)     (gather + scatter)
//   flat:               rounds as given (announcements, derandomizer chunks)
//
// All charges are doubles; fractional rounds are kept as-is so constants and
// slopes stay visible.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ccsp {

struct CostModel {
  double source_detection = 1.0;
  double filtered_mm = 1.0;
  double sparse_mm = 1.0;
  double distance_through = 1.0;
  double broadcast = 1.0;
  double flat = 1.0;

  // Machine words are ceil(log2 n) bits; recorded for report metadata only.
  static std::size_t word_bits(std::size_t n);
};

struct LedgerEntry {
  std::string primitive;
  std::string detail;  // human-readable parameter summary
  double rounds = 0.0;
};

class RoundLedger {
 public:
  explicit RoundLedger(std::size_t n, CostModel model = {})
      : n_(n), model_(model) {}

  std::size_t n() const { return n_; }
  const CostModel& model() const { return model_; }

  double charge_source_detection(std::size_t m, std::size_t s, double d);
  double charge_filtered_mm(std::size_t rho_s, std::size_t rho_t,
                            std::size_t rho, double value_range);
  double charge_sparse_mm(std::size_t rho_s, std::size_t rho_t);
  double charge_distance_through(std::size_t rho);
  double charge_broadcast_learn(std::size_t words);
  double charge_flat(const std::string& name, double rounds);

  double total() const;
  std::map<std::string, double> by_primitive() const;
  const std::vector<LedgerEntry>& entries() const { return entries_; }

  // Fold another ledger's entries into this one (used when a sub-build keeps
  // its own ledger).
  void absorb(const RoundLedger& other);

  void dump_json(std::ostream& out) const;
  void dump_csv(std::ostream& out) const;

 private:
  double add(const std::string& primitive, std::string detail, double rounds);

  std::size_t n_;
  CostModel model_;
  std::vector<LedgerEntry> entries_;
};

}  // namespace ccsp
