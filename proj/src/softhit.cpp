#include "ccsp/softhit.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "ccsp/errors.hpp"
#include "ccsp/minplus.hpp"

namespace ccsp {

// ---------------------------------------------------------------------------
// Instance basics
// ---------------------------------------------------------------------------

void SoftHitInstance::validate() const {
  if (delta < 1.0) throw ParameterError("soft hit: delta must be >= 1");
  for (const auto& t : holders) {
    if (double(t.size()) < delta)
      throw ParameterError("soft hit: holder set smaller than delta");
    for (auto i : t)
      if (i >= universe) throw ParameterError("soft hit: item out of range");
  }
}

unsigned SoftHitInstance::block_bits() const {
  unsigned ell = 0;
  while ((2.0 * (1 << ell)) <= delta) ++ell;  // floor(log2 delta)
  return ell;
}

double SoftHitInstance::chi() const {
  if (holders.empty()) return 0.0;
  return double(universe) / (delta * delta * double(holders.size()));
}

std::size_t sh_value(const std::vector<std::uint32_t>& t,
                     const std::vector<char>& z_mask) {
  for (auto i : t)
    if (z_mask[i]) return 0;
  return t.size();
}

bool evaluate_hash(const std::vector<char>& seed_bits, std::uint32_t item,
                   unsigned ell) {
  const std::size_t base = std::size_t(item) * ell;
  for (unsigned b = 0; b < ell; ++b)
    if (!seed_bits[base + b]) return false;
  return true;
}

std::vector<std::uint32_t> hash_select(const SoftHitInstance& inst,
                                       const std::vector<char>& seed_bits) {
  const unsigned ell = inst.block_bits();
  std::vector<std::uint32_t> z;
  for (std::uint32_t i = 0; i < inst.universe; ++i)
    if (ell == 0 || evaluate_hash(seed_bits, i, ell)) z.push_back(i);
  return z;
}

double soft_hit_cost(const SoftHitInstance& inst,
                     const std::vector<std::uint32_t>& z) {
  std::vector<char> mask(inst.universe, 0);
  for (auto i : z) mask[i] = 1;
  double mass = 0.0;
  for (const auto& t : inst.holders) mass += double(sh_value(t, mask));
  return double(z.size()) + inst.chi() * mass;
}

// ---------------------------------------------------------------------------
// Independent-bits conditional expectations
// ---------------------------------------------------------------------------

double conditional_cost_expectation(const SoftHitInstance& inst,
                                    const std::vector<signed char>& bits) {
  const unsigned ell = inst.block_bits();
  const std::size_t g = std::size_t(inst.universe) * ell;
  if (bits.size() != g)
    throw ParameterError("conditional expectation: bit vector length");

  std::vector<double> q(inst.universe, 1.0);
  for (std::uint32_t i = 0; i < inst.universe; ++i) {
    unsigned unfixed = 0;
    bool zero = false;
    for (unsigned b = 0; b < ell; ++b) {
      signed char v = bits[std::size_t(i) * ell + b];
      if (v == 0) {
        zero = true;
        break;
      }
      if (v < 0) ++unfixed;
    }
    q[i] = zero ? 0.0 : std::ldexp(1.0, -int(unfixed));
  }

  double sum_q = 0.0;
  for (double x : q) sum_q += x;

  double sh = 0.0;
  for (const auto& t : inst.holders) {
    double prod = 1.0;
    for (auto i : t) prod *= 1.0 - q[i];
    sh += double(t.size()) * prod;
  }
  return sum_q + inst.chi() * sh;
}

namespace {

// Mutable state for the chunk-by-chunk independent-bits derandomizer.
// Blocks coincide with universe items; q[i] is the current probability that
// item i lands in Z given the fixed prefix.
class IndependentBitsState {
 public:
  IndependentBitsState(const SoftHitInstance& inst)
      : inst_(inst),
        ell_(inst.block_bits()),
        g_(std::size_t(inst.universe) * ell_),
        chi_(inst.chi()),
        bits_(g_, -1),
        q_(inst.universe, 0.0),
        holder_prod_(inst.holders.size(), 1.0),
        item_holders_(inst.universe),
        holder_mark_(inst.holders.size(), 0) {
    for (std::size_t h = 0; h < inst.holders.size(); ++h)
      for (auto i : inst_.holders[h]) item_holders_[i].push_back(h);
    recompute();
  }

  std::size_t seed_len() const { return g_; }
  double expectation() const { return sum_q_ + chi_ * sh_sum_; }
  const std::vector<signed char>& bits() const { return bits_; }

  // E[cost] if the nbits bits starting at `start` were fixed to `val`
  // (little-endian within the chunk). Does not mutate state.
  double evaluate(std::size_t start, unsigned nbits, std::uint64_t val) {
    override_.clear();
    const std::uint32_t first_item = std::uint32_t(start / ell_);
    const std::uint32_t last_item = std::uint32_t((start + nbits - 1) / ell_);
    double sum_q = sum_q_;
    for (std::uint32_t i = first_item; i <= last_item; ++i) {
      double nq = item_q_with_chunk(i, start, nbits, val);
      sum_q += nq - q_[i];
      override_.push_back({i, nq});
    }
    double sh = sh_sum_;
    ++stampgen_;
    for (auto [item, nq] : override_) {
      (void)nq;
      for (auto h : item_holders_[item]) {
        if (holder_mark_[h] == stampgen_) continue;
        holder_mark_[h] = stampgen_;
        double prod = 1.0;
        for (auto j : inst_.holders[h]) prod *= 1.0 - q_lookup(j);
        sh += double(inst_.holders[h].size()) * (prod - holder_prod_[h]);
      }
    }
    return sum_q + chi_ * sh;
  }

  void commit(std::size_t start, unsigned nbits, std::uint64_t val) {
    for (unsigned b = 0; b < nbits; ++b)
      bits_[start + b] = static_cast<signed char>((val >> b) & 1);
    recompute();
  }

 private:
  double q_lookup(std::uint32_t item) const {
    for (auto [i, nq] : override_)
      if (i == item) return nq;
    return q_[item];
  }

  double item_q_with_chunk(std::uint32_t item, std::size_t start,
                           unsigned nbits, std::uint64_t val) const {
    unsigned unfixed = 0;
    for (unsigned b = 0; b < ell_; ++b) {
      std::size_t idx = std::size_t(item) * ell_ + b;
      signed char v;
      if (idx >= start && idx < start + nbits)
        v = static_cast<signed char>((val >> (idx - start)) & 1);
      else
        v = bits_[idx];
      if (v == 0) return 0.0;
      if (v < 0) ++unfixed;
    }
    return std::ldexp(1.0, -int(unfixed));
  }

  // Full recomputation; run per commit to keep float drift out of the
  // monotonicity trace.
  void recompute() {
    sum_q_ = 0.0;
    for (std::uint32_t i = 0; i < inst_.universe; ++i) {
      unsigned unfixed = 0;
      bool zero = false;
      for (unsigned b = 0; b < ell_; ++b) {
        signed char v = bits_[std::size_t(i) * ell_ + b];
        if (v == 0) {
          zero = true;
          break;
        }
        if (v < 0) ++unfixed;
      }
      q_[i] = zero ? 0.0 : std::ldexp(1.0, -int(unfixed));
      sum_q_ += q_[i];
    }
    sh_sum_ = 0.0;
    for (std::size_t h = 0; h < inst_.holders.size(); ++h) {
      double prod = 1.0;
      for (auto i : inst_.holders[h]) prod *= 1.0 - q_[i];
      holder_prod_[h] = prod;
      sh_sum_ += double(inst_.holders[h].size()) * prod;
    }
  }

  const SoftHitInstance& inst_;
  unsigned ell_;
  std::size_t g_;
  double chi_;
  std::vector<signed char> bits_;
  std::vector<double> q_;
  std::vector<double> holder_prod_;
  std::vector<std::vector<std::size_t>> item_holders_;
  std::vector<std::uint64_t> holder_mark_;
  std::uint64_t stampgen_ = 0;
  double sum_q_ = 0.0;
  double sh_sum_ = 0.0;
  std::vector<std::pair<std::uint32_t, double>> override_;
};

unsigned chunk_bits_for(std::size_t universe) {
  unsigned b = 0;
  while ((std::size_t(2) << b) <= universe) ++b;  // floor(log2 N)
  return b == 0 ? 1 : b;
}

}  // namespace

DerandResult derandomize_soft_hitting(const SoftHitInstance& inst,
                                      RoundLedger* ledger) {
  inst.validate();
  DerandResult res;

  const unsigned ell = inst.block_bits();
  if (ell == 0) {
    // Every item hashes to 1: Z = R. Happens only for delta < 2.
    for (std::uint32_t i = 0; i < inst.universe; ++i) res.z.push_back(i);
    res.final_cost = soft_hit_cost(inst, res.z);
    res.initial_expectation = res.final_cost;
    if (ledger) ledger->charge_flat("softhit_derand", 1.0);
    return res;
  }

  IndependentBitsState state(inst);
  res.initial_expectation = state.expectation();

  const unsigned cb = chunk_bits_for(inst.universe);
  const std::size_t g = state.seed_len();
  std::size_t chunks = 0;
  for (std::size_t start = 0; start < g; start += cb) {
    const unsigned nbits = unsigned(std::min<std::size_t>(cb, g - start));
    double best = 0.0;
    std::uint64_t best_val = 0;
    for (std::uint64_t val = 0; val < (std::uint64_t(1) << nbits); ++val) {
      double e = state.evaluate(start, nbits, val);
      if (val == 0 || e < best) {
        best = e;
        best_val = val;
      }
    }
    state.commit(start, nbits, best_val);
    res.expectation_trace.push_back(state.expectation());
    ++chunks;
  }

  std::vector<char> seed(g);
  for (std::size_t b = 0; b < g; ++b) seed[b] = char(state.bits()[b]);
  res.z = hash_select(inst, seed);
  res.final_cost = soft_hit_cost(inst, res.z);

  if (ledger) {
    ledger->charge_flat("softhit_announce", 1.0);
    ledger->charge_flat("softhit_derand_chunks", double(chunks));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Small-seed mode
// ---------------------------------------------------------------------------

SmallSeedGenerator default_small_seed_generator(unsigned seed_bits) {
  SmallSeedGenerator gen;
  gen.seed_bits = seed_bits;
  gen.expand = [](std::uint64_t seed, std::uint64_t bit_index) {
    std::uint64_t st = seed * 0x9e3779b97f4a7c15ULL + bit_index / 64 + 1;
    std::uint64_t w = detail::splitmix64(st);
    return ((w >> (bit_index % 64)) & 1) != 0;
  };
  return gen;
}

namespace {

double small_seed_cost(const SoftHitInstance& inst,
                       const SmallSeedGenerator& gen, std::uint64_t seed,
                       std::vector<char>& scratch_bits) {
  const unsigned ell = inst.block_bits();
  const std::size_t g = std::size_t(inst.universe) * ell;
  scratch_bits.resize(g);
  for (std::size_t b = 0; b < g; ++b)
    scratch_bits[b] = gen.expand(seed, b) ? 1 : 0;
  return soft_hit_cost(inst, hash_select(inst, scratch_bits));
}

}  // namespace

DerandResult derandomize_soft_hitting_small_seed(
    const SoftHitInstance& inst, const SmallSeedGenerator& gen,
    RoundLedger* ledger) {
  inst.validate();
  if (gen.seed_bits == 0 || gen.seed_bits > 20)
    throw ParameterError("small-seed mode: seed bits must be in [1, 20]");

  DerandResult res;
  if (inst.block_bits() == 0) {
    for (std::uint32_t i = 0; i < inst.universe; ++i) res.z.push_back(i);
    res.final_cost = soft_hit_cost(inst, res.z);
    res.initial_expectation = res.final_cost;
    return res;
  }

  const unsigned r = gen.seed_bits;
  std::vector<char> scratch;

  // Exact E[cost | low `fixed` bits = prefix] by enumerating completions.
  auto expect = [&](unsigned fixed, std::uint64_t prefix) {
    const unsigned rest = r - fixed;
    double total = 0.0;
    for (std::uint64_t hi = 0; hi < (std::uint64_t(1) << rest); ++hi)
      total += small_seed_cost(inst, gen, prefix | (hi << fixed), scratch);
    return total / double(std::uint64_t(1) << rest);
  };

  res.initial_expectation = expect(0, 0);

  const unsigned cb = chunk_bits_for(inst.universe);
  unsigned fixed = 0;
  std::uint64_t prefix = 0;
  std::size_t chunks = 0;
  while (fixed < r) {
    const unsigned nbits = std::min(cb, r - fixed);
    double best = 0.0;
    std::uint64_t best_val = 0;
    for (std::uint64_t val = 0; val < (std::uint64_t(1) << nbits); ++val) {
      double e = expect(fixed + nbits, prefix | (val << fixed));
      if (val == 0 || e < best) {
        best = e;
        best_val = val;
      }
    }
    prefix |= best_val << fixed;
    fixed += nbits;
    res.expectation_trace.push_back(best);
    ++chunks;
  }

  const unsigned ell = inst.block_bits();
  const std::size_t g = std::size_t(inst.universe) * ell;
  std::vector<char> bits(g);
  for (std::size_t b = 0; b < g; ++b) bits[b] = gen.expand(prefix, b) ? 1 : 0;
  res.z = hash_select(inst, bits);
  res.final_cost = soft_hit_cost(inst, res.z);

  if (ledger) {
    ledger->charge_flat("softhit_announce", 1.0);
    ledger->charge_flat("softhit_derand_chunks", double(chunks));
  }
  return res;
}

DerandResult monte_carlo_soft_hitting(const SoftHitInstance& inst,
                                      std::size_t trials, Rng& rng) {
  inst.validate();
  const unsigned ell = inst.block_bits();
  const std::size_t g = std::size_t(inst.universe) * ell;
  DerandResult res;
  res.initial_expectation = 0.0;
  std::vector<char> bits(g);
  bool have = false;
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t b = 0; b < g; ++b) bits[b] = rng.next_bit() ? 1 : 0;
    auto z = hash_select(inst, bits);
    double cost = soft_hit_cost(inst, z);
    res.initial_expectation += cost;
    if (!have || cost < res.final_cost) {
      have = true;
      res.final_cost = cost;
      res.z = std::move(z);
    }
  }
  if (trials) res.initial_expectation /= double(trials);  // empirical mean
  return res;
}

SoftHitCheck verify_soft_hitting(const SoftHitInstance& inst,
                                 const std::vector<std::uint32_t>& z,
                                 double c_size, double c_mass) {
  SoftHitCheck chk;
  chk.z_size = z.size();
  std::vector<char> mask(inst.universe, 0);
  for (auto i : z) mask[i] = 1;
  std::size_t mass = 0;
  for (const auto& t : inst.holders) mass += sh_value(t, mask);
  chk.sh_mass = mass;
  chk.size_bound = c_size * double(inst.universe) / inst.delta;
  chk.mass_bound = c_mass * double(inst.holders.size()) * inst.delta;
  chk.size_ok = double(chk.z_size) <= chk.size_bound;
  chk.mass_ok = double(chk.sh_mass) <= chk.mass_bound;
  return chk;
}

// ---------------------------------------------------------------------------
// Deterministic hitting set
// ---------------------------------------------------------------------------

std::vector<VertexId> deterministic_hitting_set(const HittingFamily& family,
                                                double c, RoundLedger* ledger) {
  const std::size_t n = family.universe;
  if (n == 0) throw ParameterError("det hitting set: empty universe");
  if (family.k == 0) throw ParameterError("det hitting set: k must be >= 1");
  for (const auto& s : family.sets) {
    if (s.size() < family.k)
      throw ParameterError("det hitting set: set smaller than k");
    for (auto v : s)
      if (v >= n) throw ParameterError("det hitting set: vertex out of range");
  }

  const double p = std::min(1.0, c * std::log(double(n)) / double(family.k));
  const double w = std::pow(double(n), c - 1.0);
  const std::size_t nsets = family.sets.size();

  std::vector<std::size_t> unfixed(nsets);
  std::vector<char> has_one(nsets, 0);
  std::vector<double> contrib(nsets);
  std::vector<std::vector<std::uint32_t>> member_sets(n);
  for (std::size_t s = 0; s < nsets; ++s) {
    unfixed[s] = family.sets[s].size();
    contrib[s] = w * std::pow(1.0 - p, double(unfixed[s]));
    for (auto v : family.sets[s]) member_sets[v].push_back(std::uint32_t(s));
  }

  auto phi_all = [&](std::size_t ones, std::size_t unfixed_vertices) {
    double t1 = (double(ones) + p * double(unfixed_vertices)) /
                (3.0 * p * double(n));
    double t2 = 0.0;
    for (std::size_t s = 0; s < nsets; ++s)
      if (!has_one[s]) t2 += contrib[s];
    return t1 + t2;
  };

  std::size_t ones = 0;
  std::size_t unfixed_vertices = n;
  double phi = phi_all(ones, unfixed_vertices);
  if (phi >= 1.0)
    throw ParameterError(
        "det hitting set: pessimistic estimator >= 1 at the root; "
        "increase c");

  std::vector<char> x(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    // Delta to phi if x_v = 1 vs x_v = 0.
    double d1 = (1.0 - p) / (3.0 * p * double(n));
    double d0 = -p / (3.0 * p * double(n));
    for (auto s : member_sets[v]) {
      if (has_one[s]) continue;
      d1 -= contrib[s];  // set becomes hit
      double next = w * std::pow(1.0 - p, double(unfixed[s] - 1));
      d0 += next - contrib[s];
    }
    const bool take = d1 < d0;  // tie keeps the vertex out
    x[v] = take ? 1 : 0;
    if (take) ++ones;
    --unfixed_vertices;
    for (auto s : member_sets[v]) {
      if (has_one[s]) continue;
      --unfixed[s];
      if (take) {
        has_one[s] = 1;
        contrib[s] = 0.0;
      } else {
        contrib[s] = w * std::pow(1.0 - p, double(unfixed[s]));
      }
    }
    phi += take ? d1 : d0;
  }

  // phi < 1 throughout, so no set can be missed and |A| < 3pn.
  std::vector<VertexId> a;
  for (VertexId v = 0; v < n; ++v)
    if (x[v]) a.push_back(v);
  for (std::size_t s = 0; s < nsets; ++s) assert(has_one[s]);

  if (ledger) {
    double ll = double(ceil_log2(std::max<std::uint64_t>(
        2, ceil_log2(std::max<std::uint64_t>(2, n)))));
    ledger->charge_flat("det_hitting_set", ll * ll * ll);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

void dump_soft_hit_instance(std::ostream& out, const SoftHitInstance& inst) {
  nlohmann::json j;
  j["universe"] = inst.universe;
  j["delta"] = inst.delta;
  j["holders"] = inst.holders;
  out << j.dump(2) << '\n';
}

SoftHitInstance load_soft_hit_instance(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("soft hit instance parse: ") + e.what());
  }
  SoftHitInstance inst;
  try {
    inst.universe = j.at("universe").get<std::size_t>();
    inst.delta = j.at("delta").get<double>();
    inst.holders =
        j.at("holders").get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("soft hit instance fields: ") + e.what());
  }
  inst.validate();
  return inst;
}

}  // namespace ccsp
