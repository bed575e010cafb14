#include "ccsp/ledger.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "ccsp/errors.hpp"

namespace ccsp {

std::size_t CostModel::word_bits(std::size_t n) {
  std::size_t b = 0;
  std::size_t x = n > 1 ? n - 1 : 1;
  while (x) {
    ++b;
    x >>= 1;
  }
  return b == 0 ? 1 : b;
}

double RoundLedger::add(const std::string& primitive, std::string detail,
                        double rounds) {
  entries_.push_back({primitive, std::move(detail), rounds});
  return rounds;
}

double RoundLedger::charge_source_detection(std::size_t m, std::size_t s,
                                            double d) {
  if (n_ == 0) throw ParameterError("ledger: n == 0");
  double nn = double(n_);
  double rounds = model_.source_detection *
                  (std::cbrt(double(m)) * std::pow(double(s), 2.0 / 3.0) / nn +
                   1.0) *
                  d;
  std::ostringstream os;
  os << "m=" << m << " s=" << s << " d=" << d;
  return add("source_detection", os.str(), rounds);
}

double RoundLedger::charge_filtered_mm(std::size_t rho_s, std::size_t rho_t,
                                       std::size_t rho, double value_range) {
  double nn = double(n_);
  double vol = double(rho_s) * double(rho_t) * double(rho);
  double w = value_range > 1.0 ? std::log2(value_range) : 0.0;
  double rounds =
      model_.filtered_mm * (std::cbrt(vol) / std::pow(nn, 2.0 / 3.0) + w);
  std::ostringstream os;
  os << "rho_s=" << rho_s << " rho_t=" << rho_t << " rho=" << rho
     << " W=" << value_range;
  return add("filtered_mm", os.str(), rounds);
}

double RoundLedger::charge_sparse_mm(std::size_t rho_s, std::size_t rho_t) {
  double nn = double(n_);
  double rounds =
      model_.sparse_mm *
      (std::cbrt(double(rho_s) * double(rho_t)) / std::cbrt(nn) + 1.0);
  std::ostringstream os;
  os << "rho_s=" << rho_s << " rho_t=" << rho_t;
  return add("sparse_mm", os.str(), rounds);
}

double RoundLedger::charge_distance_through(std::size_t rho) {
  double nn = double(n_);
  double rounds = model_.distance_through *
                  (std::pow(double(rho), 2.0 / 3.0) / std::cbrt(nn) + 1.0);
  std::ostringstream os;
  os << "rho=" << rho;
  return add("distance_through", os.str(), rounds);
}

double RoundLedger::charge_broadcast_learn(std::size_t words) {
  double per_dir = std::ceil(double(words) / double(n_));
  double rounds = model_.broadcast * 2.0 * per_dir;
  std::ostringstream os;
  os << "words=" << words;
  return add("broadcast_learn", os.str(), rounds);
}

double RoundLedger::charge_flat(const std::string& name, double rounds) {
  return add(name, "", model_.flat * rounds);
}

double RoundLedger::total() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.rounds;
  return t;
}

std::map<std::string, double> RoundLedger::by_primitive() const {
  std::map<std::string, double> agg;
  for (const auto& e : entries_) agg[e.primitive] += e.rounds;
  return agg;
}

void RoundLedger::absorb(const RoundLedger& other) {
  entries_.insert(entries_.end(), other.entries_.begin(),
                  other.entries_.end());
}

void RoundLedger::dump_json(std::ostream& out) const {
  nlohmann::json j;
  j["n"] = n_;
  j["word_bits"] = CostModel::word_bits(n_);
  j["total_rounds"] = total();
  j["by_primitive"] = by_primitive();
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : entries_) {
    entries.push_back(
        {{"primitive", e.primitive}, {"detail", e.detail}, {"rounds", e.rounds}});
  }
  j["entries"] = std::move(entries);
  out << j.dump(2) << '\n';
}

void RoundLedger::dump_csv(std::ostream& out) const {
  out << "primitive,detail,rounds\n";
  for (const auto& e : entries_) {
    std::string detail = e.detail;
    for (auto& c : detail)
      if (c == ',') c = ';';
    out << e.primitive << ',' << detail << ',' << e.rounds << '\n';
  }
}

}  // namespace ccsp
