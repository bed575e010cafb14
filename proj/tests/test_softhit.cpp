// Soft hitting sets: the cost function at hand-evaluated points, exact
// conditional expectations, the derandomizer's monotone-trace invariant in
// both seed modes, and the zero-miss deterministic hitting set.

#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"

#include "ccsp/errors.hpp"
#include "ccsp/ledger.hpp"
#include "ccsp/rng.hpp"
#include "ccsp/softhit.hpp"

using namespace ccsp;

namespace {

SoftHitInstance make_instance(std::size_t universe, double delta,
                              std::vector<std::vector<std::uint32_t>> holders) {
  SoftHitInstance inst;
  inst.universe = universe;
  inst.delta = delta;
  inst.holders = std::move(holders);
  inst.validate();
  return inst;
}

std::vector<char> mask_of(std::size_t universe,
                          std::vector<std::uint32_t> items) {
  std::vector<char> m(universe, 0);
  for (auto i : items) m[i] = 1;
  return m;
}

SoftHitInstance random_instance(std::size_t n, double delta, std::size_t sets,
                                std::uint64_t seed) {
  Rng rng(seed, "softhit-instance");
  std::vector<std::vector<std::uint32_t>> holders;
  const auto size = std::size_t(2.0 * delta);
  for (std::size_t s = 0; s < sets; ++s) {
    std::vector<std::uint32_t> t;
    while (t.size() < size) {
      auto x = std::uint32_t(rng.next_below(n));
      if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
    }
    holders.push_back(std::move(t));
  }
  return make_instance(n, delta, std::move(holders));
}

}  // namespace

TEST_CASE("sh value is zero on intersection, set size on a miss") {
  CHECK(sh_value({1, 2, 3}, mask_of(10, {3, 9})) == 0);
  CHECK(sh_value({1, 2, 3}, mask_of(10, {5, 6})) == 3);
  CHECK(sh_value({4}, mask_of(10, {4})) == 0);
}

TEST_CASE("block bits are floor(log2 delta)") {
  CHECK(make_instance(4, 1.0, {}).block_bits() == 0);
  CHECK(make_instance(4, 2.0, {}).block_bits() == 1);
  CHECK(make_instance(8, 3.0, {}).block_bits() == 1);
  CHECK(make_instance(8, 4.0, {}).block_bits() == 2);
  CHECK(make_instance(64, 32.0, {}).block_bits() == 5);
}

TEST_CASE("cost at a hand-evaluated point") {
  // chi = 8 / (4 * 2) = 1; Z = {0} hits the first set, misses the second.
  auto inst = make_instance(8, 2.0, {{0, 1}, {2, 3}});
  CHECK(soft_hit_cost(inst, {0}) == doctest::Approx(3.0));
  // Z hitting every set costs only its size.
  CHECK(soft_hit_cost(inst, {0, 2}) == doctest::Approx(2.0));
  // Empty Z with one delta-sized holder: cost = N / delta.
  auto single = make_instance(8, 2.0, {{5, 6}});
  CHECK(soft_hit_cost(single, {}) == doctest::Approx(8.0 / 2.0));
}

TEST_CASE("hash selection takes exactly the all-ones blocks") {
  auto inst = make_instance(3, 4.0, {});  // two bits per item
  std::vector<char> bits{1, 1, 0, 1, 1, 1};
  CHECK(evaluate_hash(bits, 0, 2));
  CHECK_FALSE(evaluate_hash(bits, 1, 2));
  CHECK(hash_select(inst, bits) == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("conditional expectation closed form on the empty prefix") {
  // E[|Z|] = N 2^-ell; E[mass] = sum |S| (1 - 2^-ell)^|S|.
  auto inst = make_instance(16, 4.0, {{0, 1, 2, 3}, {4, 5, 6, 7}, {1, 5, 9, 13}});
  std::vector<signed char> bits(16 * 2, -1);
  const double chi = 16.0 / (16.0 * 3.0);
  const double want = 16.0 * 0.25 + chi * 3.0 * 4.0 * std::pow(0.75, 4.0);
  CHECK(conditional_cost_expectation(inst, bits) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("conditional expectation after fixing one block") {
  // Four items, one bit each, no holders; block 0 fixed to 1.
  auto inst = make_instance(4, 2.0, {});
  std::vector<signed char> bits{1, -1, -1, -1};
  CHECK(conditional_cost_expectation(inst, bits) ==
        doctest::Approx(1.0 + 3.0 / 2.0));
  // A zero bit removes the item entirely.
  bits[0] = 0;
  CHECK(conditional_cost_expectation(inst, bits) ==
        doctest::Approx(3.0 / 2.0));
}

TEST_CASE("fully fixed prefix equals the realized cost") {
  auto inst = random_instance(16, 4.0, 4, 7);
  std::vector<signed char> bits(16 * 2);
  Rng rng(3, "fix");
  for (auto& b : bits) b = rng.next_bit() ? 1 : 0;
  std::vector<char> as_char(bits.begin(), bits.end());
  const double direct = soft_hit_cost(inst, hash_select(inst, as_char));
  CHECK(conditional_cost_expectation(inst, bits) ==
        doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("derandomizer trace is monotone and beats the expectation") {
  auto inst = random_instance(64, 8.0, 12, 21);
  RoundLedger ledger(64);
  auto res = derandomize_soft_hitting(inst, &ledger);

  CHECK(res.final_cost <= res.initial_expectation + 1e-9);
  double prev = res.initial_expectation;
  for (double e : res.expectation_trace) {
    CHECK(e <= prev + 1e-9);
    prev = e;
  }
  // A fully fixed seed leaves no randomness: the trace ends at the cost.
  REQUIRE_FALSE(res.expectation_trace.empty());
  CHECK(res.expectation_trace.back() ==
        doctest::Approx(res.final_cost).epsilon(1e-9));

  // |Z| < 3 N / delta follows from cost <= initial expectation.
  CHECK(double(res.z.size()) <= kSoftHitSizeConstant * 64.0 / 8.0);

  // One announcement plus one flat charge covering all chunks.
  CHECK(ledger.entries().size() == 2);
}

TEST_CASE("derandomizer is deterministic and finds shared elements") {
  // Every holder contains element 3, so the optimum is tiny; the output must
  // at least meet the expected-cost guarantee and hit all sets cheaply.
  auto inst = make_instance(16, 4.0,
                            {{3, 0, 1, 2}, {3, 4, 5, 6}, {3, 7, 8, 9},
                             {3, 10, 11, 12}});
  auto a = derandomize_soft_hitting(inst, nullptr);
  auto b = derandomize_soft_hitting(inst, nullptr);
  CHECK(a.z == b.z);
  CHECK(a.final_cost <= a.initial_expectation + 1e-9);
  auto check = verify_soft_hitting(inst, a.z, 8.0, 8.0);
  CHECK(check.ok());
}

TEST_CASE("delta below two degenerates to taking everything") {
  auto inst = make_instance(6, 1.0, {{2}});
  auto res = derandomize_soft_hitting(inst, nullptr);
  CHECK(res.z.size() == 6);
}

TEST_CASE("small-seed mode keeps the expectation invariant") {
  auto inst = random_instance(32, 4.0, 8, 5);
  auto gen = default_small_seed_generator(10);
  RoundLedger ledger(32);
  auto res = derandomize_soft_hitting_small_seed(inst, gen, &ledger);

  CHECK(res.final_cost <= res.initial_expectation + 1e-9);
  double prev = res.initial_expectation;
  for (double e : res.expectation_trace) {
    CHECK(e <= prev + 1e-9);
    prev = e;
  }
  CHECK(res.expectation_trace.back() ==
        doctest::Approx(res.final_cost).epsilon(1e-9));

  // Initial expectation matches brute-force enumeration over all seeds.
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < (1u << 10); ++seed) {
    std::vector<char> bits(32 * 2);
    for (std::size_t b = 0; b < bits.size(); ++b)
      bits[b] = gen.expand(seed, b) ? 1 : 0;
    total += soft_hit_cost(inst, hash_select(inst, bits));
  }
  CHECK(res.initial_expectation ==
        doctest::Approx(total / double(1u << 10)).epsilon(1e-9));
}

TEST_CASE("small-seed mode rejects oversized seeds") {
  auto inst = random_instance(16, 4.0, 2, 1);
  auto gen = default_small_seed_generator(24);
  CHECK_THROWS_AS(derandomize_soft_hitting_small_seed(inst, gen, nullptr),
                  ParameterError);
}

TEST_CASE("monte carlo mode reports its best seed") {
  auto inst = random_instance(32, 4.0, 6, 9);
  Rng rng(3, "mc");
  auto res = monte_carlo_soft_hitting(inst, 50, rng);
  CHECK(res.final_cost <= res.initial_expectation + 1e-9);
  CHECK(soft_hit_cost(inst, res.z) == doctest::Approx(res.final_cost));
}

TEST_CASE("verification margins at the extremes") {
  auto inst = random_instance(32, 8.0, 4, 2);
  std::vector<std::uint32_t> all;
  for (std::uint32_t i = 0; i < 32; ++i) all.push_back(i);
  auto full = verify_soft_hitting(inst, all, 4.0, 4.0);
  CHECK_FALSE(full.size_ok);  // 32 > 4 * 32 / 8
  CHECK(full.mass_ok);        // everything hit
  auto empty = verify_soft_hitting(inst, {}, 4.0, 4.0);
  CHECK(empty.size_ok);
  CHECK(empty.sh_mass == 4 * 16);  // every holder pays its size
}

TEST_CASE("instance validation rejects undersized holders") {
  SoftHitInstance inst;
  inst.universe = 8;
  inst.delta = 4.0;
  inst.holders = {{0, 1}};
  CHECK_THROWS_AS(inst.validate(), ParameterError);
}

TEST_CASE("instance json round trip") {
  auto inst = random_instance(16, 2.0, 3, 11);
  std::ostringstream out;
  dump_soft_hit_instance(out, inst);
  std::istringstream in(out.str());
  auto back = load_soft_hit_instance(in);
  CHECK(back.universe == inst.universe);
  CHECK(back.delta == inst.delta);
  CHECK(back.holders == inst.holders);
}

TEST_CASE("deterministic hitting set never misses") {
  const std::size_t n = 256;
  const std::size_t k = 32;
  HittingFamily family;
  family.universe = n;
  family.k = k;
  Rng rng(17, "det-family");
  for (std::size_t s = 0; s < 10; ++s) {
    std::vector<char> used(n, 0);
    std::vector<VertexId> set;
    while (set.size() < k) {
      auto v = VertexId(rng.next_below(n));
      if (!used[v]) {
        used[v] = 1;
        set.push_back(v);
      }
    }
    family.sets.push_back(std::move(set));
  }

  RoundLedger ledger(n);
  auto a = deterministic_hitting_set(family, 3.0, &ledger);
  auto rep = verify_hitting_set(family, a);
  CHECK(rep.ok());
  CHECK(double(a.size()) <= 3.0 * 3.0 * double(n) * std::log(double(n)) /
                                double(k));
  CHECK(deterministic_hitting_set(family, 3.0, nullptr) == a);

  // (log log n)^3 flat rounds.
  CHECK(ledger.total() == doctest::Approx(27.0));
}

TEST_CASE("deterministic hitting set flags infeasible estimator weights") {
  // Many full-universe sets push the estimator above one at c = 3; a larger
  // constant restores feasibility.
  const std::size_t n = 64;
  HittingFamily family;
  family.universe = n;
  family.k = n;
  std::vector<VertexId> everything;
  for (VertexId v = 0; v < n; ++v) everything.push_back(v);
  for (int s = 0; s < 200; ++s) family.sets.push_back(everything);

  CHECK_THROWS_AS(deterministic_hitting_set(family, 3.0, nullptr),
                  ParameterError);
  auto a = deterministic_hitting_set(family, 4.0, nullptr);
  CHECK(verify_hitting_set(family, a).ok());
}
