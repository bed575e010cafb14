// Round ledger: the closed-form charges at hand-evaluated parameter points,
// plus aggregation, absorption and the two dump formats.

#include <cmath>
#include <sstream>

#include "doctest.h"

#include "ccsp/ledger.hpp"

using namespace ccsp;

TEST_CASE("word size is ceil(log2 n) with a floor of one") {
  CHECK(CostModel::word_bits(1) == 1);
  CHECK(CostModel::word_bits(2) == 1);
  CHECK(CostModel::word_bits(3) == 2);
  CHECK(CostModel::word_bits(1024) == 10);
  CHECK(CostModel::word_bits(1025) == 11);
}

TEST_CASE("source detection charge at a calibrated point") {
  // m = n^{3/2}, s = sqrt(n), n = 4096: m^{1/3} s^{2/3} / n
  //   = n^{1/2} n^{1/3} / n = n^{-1/6} = 4096^{-1/6} = 1/4.
  RoundLedger ledger(4096);
  const double got = ledger.charge_source_detection(
      std::size_t(std::pow(4096.0, 1.5)), 64, 8.0);
  CHECK(got == doctest::Approx((0.25 + 1.0) * 8.0).epsilon(1e-6));
}

TEST_CASE("filtered min-plus charge at rho = 1") {
  // (1*1*1)^{1/3} / n^{2/3} + log2 W with n = 1000, W = 2.
  RoundLedger ledger(1000);
  const double got = ledger.charge_filtered_mm(1, 1, 1, 2.0);
  CHECK(got == doctest::Approx(0.01 + 1.0).epsilon(1e-6));
}

TEST_CASE("sparse min-plus and distance-through charges") {
  RoundLedger ledger(1000);
  // (1000 * 1000)^{1/3} / 10 + 1 = 10 + 1.
  CHECK(ledger.charge_sparse_mm(1000, 1000) ==
        doctest::Approx(11.0).epsilon(1e-6));
  // rho = n: n^{2/3} / n^{1/3} + 1 = n^{1/3} + 1 = 11.
  CHECK(ledger.charge_distance_through(1000) ==
        doctest::Approx(11.0).epsilon(1e-6));
}

TEST_CASE("broadcast rounds are two per ceil(words / n)") {
  RoundLedger ledger(100);
  CHECK(ledger.charge_broadcast_learn(100) == doctest::Approx(2.0));
  CHECK(ledger.charge_broadcast_learn(101) == doctest::Approx(4.0));
  CHECK(ledger.charge_broadcast_learn(1) == doctest::Approx(2.0));
}

TEST_CASE("totals, per-primitive buckets and unit-cost scaling") {
  CostModel model;
  model.flat = 2.0;
  RoundLedger ledger(64, model);
  ledger.charge_flat("announce", 3.0);
  ledger.charge_broadcast_learn(64);
  CHECK(ledger.total() == doctest::Approx(6.0 + 2.0));

  auto buckets = ledger.by_primitive();
  CHECK(buckets.at("announce") == doctest::Approx(6.0));
  CHECK(buckets.at("broadcast_learn") == doctest::Approx(2.0));
}

TEST_CASE("absorb folds entries and totals") {
  RoundLedger a(64), b(64);
  a.charge_flat("x", 1.0);
  b.charge_flat("y", 2.0);
  b.charge_distance_through(8);
  a.absorb(b);
  CHECK(a.entries().size() == 3);
  CHECK(a.total() == doctest::Approx(1.0 + 2.0 + (4.0 / 4.0 + 1.0)));
}

TEST_CASE("dumps are parseable and carry every entry") {
  RoundLedger ledger(64);
  ledger.charge_flat("announce", 1.0);
  ledger.charge_source_detection(100, 4, 3.0);

  std::ostringstream json;
  ledger.dump_json(json);
  CHECK(json.str().find("\"announce\"") != std::string::npos);
  CHECK(json.str().find("source_detection") != std::string::npos);

  std::ostringstream csv;
  ledger.dump_csv(csv);
  // Header plus one line per entry.
  std::size_t lines = 0;
  for (char c : csv.str()) lines += (c == '\n');
  CHECK(lines == 3);
}
