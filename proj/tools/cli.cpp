// ccsp command line: run one pipeline and verify it, sweep emulator sizes
// across n, or re-check dumped artifacts.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parameter error,
// 3 capacity exceeded.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccsp/apps.hpp"
#include "ccsp/emulator.hpp"
#include "ccsp/errors.hpp"
#include "ccsp/graph.hpp"
#include "ccsp/hopset.hpp"
#include "ccsp/ledger.hpp"
#include "ccsp/minplus.hpp"
#include "ccsp/rng.hpp"
#include "ccsp/softhit.hpp"

namespace {

using nlohmann::json;
using namespace ccsp;

constexpr const char* kVersion = "ccsp 0.1.0";

struct Options {
  std::string algo = "emulator";
  std::string graph = "gnp";
  std::string graph_file;
  std::size_t n = 256;
  double p = -1.0;  // < 0: use n^{-3/4}
  std::size_t rows = 8, cols = 8;
  std::size_t clique_n = 8, bridge_len = 4;
  double eps = 0.5;
  unsigned r = 0;  // 0: default levels
  std::string mode = "ideal";
  std::string build = "randomized";
  Dist t = 8;
  std::size_t k = 4;
  std::uint64_t seed = 1;
  std::size_t reps = 1;
  std::size_t sources = 0;  // 0: ceil(sqrt n)
  double delta = 8.0;       // soft-hitting instance parameter
  std::string out;
  std::string ledger_csv;
  std::string save_graph;
  std::string artifact;
  std::vector<std::size_t> n_list;
  std::size_t seeds = 10;
  std::string kind = "emulator";
  double mult = 1.0;
  double add = 0.0;
};

EmulatorMode parse_mode(const std::string& s) {
  if (s == "ideal") return EmulatorMode::kIdeal;
  if (s == "clique") return EmulatorMode::kClique;
  if (s == "clique_whp") return EmulatorMode::kCliqueWhp;
  if (s == "deterministic") return EmulatorMode::kDeterministic;
  throw UsageError("unknown emulator mode: " + s);
}

BuildMode parse_build(const std::string& s) {
  if (s == "randomized") return BuildMode::kRandomized;
  if (s == "deterministic") return BuildMode::kDeterministic;
  throw UsageError("unknown build mode: " + s);
}

Graph make_graph(const Options& opt, std::uint64_t seed,
                 std::vector<std::string>* labels) {
  if (opt.graph == "gnp") {
    const double p =
        opt.p >= 0.0 ? opt.p : std::pow(double(opt.n), -0.75);
    return gnp_graph(opt.n, p, seed);
  }
  if (opt.graph == "path") return path_graph(opt.n);
  if (opt.graph == "cycle") return cycle_graph(opt.n);
  if (opt.graph == "grid") return grid_graph(opt.rows, opt.cols);
  if (opt.graph == "complete") return complete_graph(opt.n);
  if (opt.graph == "barbell") {
    return barbell_graph(opt.clique_n, opt.bridge_len);
  }
  if (opt.graph == "file") {
    std::ifstream in(opt.graph_file);
    if (!in) throw UsageError("cannot open graph file: " + opt.graph_file);
    auto loaded = load_edge_list(in);
    if (labels != nullptr) *labels = loaded.labels;
    return loaded.graph;
  }
  throw UsageError("unknown graph family: " + opt.graph);
}

json ledger_json(const RoundLedger& ledger) {
  std::ostringstream os;
  ledger.dump_json(os);
  return json::parse(os.str());
}

json resolved_config(const Options& opt) {
  json cfg;
  cfg["algo"] = opt.algo;
  cfg["graph"] = opt.graph;
  if (!opt.graph_file.empty()) cfg["graph_file"] = opt.graph_file;
  cfg["n"] = opt.n;
  cfg["p"] = opt.p;
  cfg["rows"] = opt.rows;
  cfg["cols"] = opt.cols;
  cfg["eps"] = opt.eps;
  cfg["r"] = opt.r;
  cfg["mode"] = opt.mode;
  cfg["build"] = opt.build;
  cfg["t"] = opt.t;
  cfg["k"] = opt.k;
  cfg["seed"] = opt.seed;
  cfg["reps"] = opt.reps;
  cfg["sources"] = opt.sources;
  cfg["delta"] = opt.delta;
  return cfg;
}

// One repetition of the selected pipeline; returns (report, ok).
std::pair<json, bool> run_once(const Options& opt, std::uint64_t seed) {
  json rep;
  rep["seed"] = seed;
  bool ok = true;

  Graph g = make_graph(opt, seed, nullptr);
  rep["graph_n"] = g.n();
  rep["graph_m"] = g.m();
  RoundLedger ledger(g.n());

  if (opt.algo == "emulator") {
    const unsigned r = opt.r == 0 ? default_emulator_levels(g.n()) : opt.r;
    auto em = build_emulator(g, opt.eps, r, parse_mode(opt.mode), seed,
                             &ledger);
    auto check = verify_emulator(g, em);
    ok = check.ok() && em.clean();
    rep["edges"] = em.edges.size();
    rep["additive"] = em.additive_term;
    rep["stretch_violations"] = check.stretch_violations;
    rep["lower_violations"] = check.lower_violations;
    rep["max_mult_ratio"] = check.max_mult_ratio;
    rep["size_ratio"] = check.size_ratio;
    rep["flagged_heavy"] = em.flagged_heavy.size();
    if (!opt.artifact.empty()) {
      std::ofstream out(opt.artifact);
      dump_emulator(out, em);
    }
  } else if (opt.algo == "hopset") {
    auto hs = build_bounded_hopset(g, opt.eps, opt.t, parse_build(opt.build),
                                   seed, &ledger);
    auto check = verify_hopset(g, hs);
    ok = check.ok();
    rep["edges"] = hs.edges.size();
    rep["beta"] = hs.params.beta;
    rep["stretch_violations"] = check.stretch_violations;
    rep["lower_violations"] = check.lower_violations;
  } else if (opt.algo == "knearest") {
    auto table = k_nearest_bounded(g, opt.k, opt.t, &ledger);
    std::size_t full = 0;
    for (std::size_t v = 0; v < g.n(); ++v) full += table.full(VertexId(v));
    rep["full_rows"] = full;
  } else if (opt.algo == "mssp") {
    const auto count = opt.sources != 0
                           ? opt.sources
                           : std::size_t(std::ceil(std::sqrt(double(g.n()))));
    std::vector<VertexId> sources;
    Rng rng(seed, "cli-sources");
    for (std::size_t i = 0; i < count; ++i) {
      sources.push_back(VertexId(rng.next_below(g.n())));
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    auto res = mssp(g, sources, opt.eps, parse_mode(opt.mode),
                    parse_build(opt.build), seed, &ledger);
    auto check = verify_mssp(g, res);
    ok = check.ok();
    rep["sources"] = sources.size();
    rep["t"] = res.t;
    rep["lower_violations"] = check.lower_violations;
    rep["upper_violations"] = check.upper_violations;
    rep["max_ratio"] = check.max_ratio;
  } else if (opt.algo == "apsp1") {
    auto res = apsp_near_additive(g, opt.eps, opt.r, parse_mode(opt.mode),
                                  seed, &ledger);
    auto report = verify_estimates(g, res.est, 1.0 + opt.eps, res.additive);
    ok = report.ok();
    rep["additive"] = res.additive;
    rep["lower_violations"] = report.lower_violations;
    rep["upper_violations"] = report.upper_violations;
    rep["max_ratio"] = report.max_ratio;
  } else if (opt.algo == "apsp2") {
    auto res = apsp_two_eps(g, opt.eps, parse_mode(opt.mode),
                            parse_build(opt.build), seed, &ledger);
    auto report = verify_estimates(g, res.est, 2.0 + res.eps, 0.0);
    ok = report.ok() && res.clean();
    rep["t"] = res.t;
    rep["lower_violations"] = report.lower_violations;
    rep["upper_violations"] = report.upper_violations;
    rep["phase_l"] = report.phase_l;
    rep["phase_h"] = report.phase_h;
    rep["phase_p"] = report.phase_p;
    rep["hitting_misses"] = res.hitting_misses;
    if (!opt.artifact.empty()) {
      std::ofstream out(opt.artifact);
      out << "u,v,estimate\n";
      for (std::size_t u = 0; u < g.n(); ++u) {
        for (std::size_t v = u + 1; v < g.n(); ++v) {
          const Dist val = res.est.at(VertexId(u), VertexId(v));
          if (val == kInfDist) continue;
          out << u << ',' << v << ',' << val << '\n';
        }
      }
    }
  } else if (opt.algo == "softhit") {
    // Random instance: n items, each of ceil(n/delta) sets holds a random
    // sample of 2*delta items.
    SoftHitInstance inst;
    inst.universe = opt.n;
    inst.delta = opt.delta;
    Rng rng(seed, "cli-softhit");
    const auto sets = std::size_t(std::ceil(double(opt.n) / opt.delta));
    const auto size = std::size_t(std::ceil(2.0 * opt.delta));
    for (std::size_t i = 0; i < sets; ++i) {
      std::vector<std::uint32_t> t;
      while (t.size() < std::min(size, opt.n)) {
        auto x = std::uint32_t(rng.next_below(opt.n));
        if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
      }
      inst.holders.push_back(std::move(t));
    }
    auto derand = derandomize_soft_hitting(inst, &ledger);
    auto check = verify_soft_hitting(inst, derand.z, 8.0, 8.0);
    ok = check.ok() && derand.final_cost <= derand.initial_expectation + 1e-9;
    rep["z_size"] = derand.z.size();
    rep["final_cost"] = derand.final_cost;
    rep["initial_expectation"] = derand.initial_expectation;
  } else {
    throw UsageError("unknown algo: " + opt.algo);
  }

  rep["rounds_total"] = ledger.total();
  rep["ledger"] = ledger_json(ledger);
  rep["ok"] = ok;

  if (!opt.save_graph.empty()) {
    std::ofstream out(opt.save_graph);
    save_edge_list(out, g);
  }
  if (!opt.ledger_csv.empty()) {
    std::ofstream out(opt.ledger_csv);
    ledger.dump_csv(out);
  }
  return {rep, ok};
}

int cmd_run(const Options& opt) {
  json report;
  report["version"] = kVersion;
  report["config"] = resolved_config(opt);
  report["runs"] = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < opt.reps; ++i) {
    auto [rep, ok] = run_once(opt, opt.seed + i);
    report["runs"].push_back(rep);
    all_ok = all_ok && ok;
  }
  report["ok"] = all_ok;

  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    out << report.dump(2) << '\n';
  } else {
    std::cout << report.dump(2) << '\n';
  }
  return all_ok ? 0 : 1;
}

int cmd_sweep(const Options& opt) {
  if (opt.n_list.empty()) throw UsageError("sweep needs a non-empty n list");
  const unsigned r = opt.r == 0 ? 2 : opt.r;

  std::vector<double> log_n, log_edges;
  std::ostringstream csv;
  csv << "n,mean_edges,mean_rounds\n";
  for (std::size_t n : opt.n_list) {
    double edge_sum = 0.0, round_sum = 0.0;
    for (std::size_t i = 0; i < opt.seeds; ++i) {
      Options local = opt;
      local.n = n;
      Graph g = make_graph(local, opt.seed + i, nullptr);
      RoundLedger ledger(n);
      auto em = build_emulator(g, opt.eps, r, parse_mode(opt.mode),
                               opt.seed + i, &ledger);
      edge_sum += double(em.edges.size());
      round_sum += ledger.total();
    }
    const double mean_edges = edge_sum / double(opt.seeds);
    csv << n << ',' << mean_edges << ','
        << round_sum / double(opt.seeds) << '\n';
    log_n.push_back(std::log(double(n)));
    log_edges.push_back(std::log(mean_edges));
  }

  std::optional<double> slope;
  if (log_n.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      sx += log_n[i];
      sy += log_edges[i];
      sxx += log_n[i] * log_n[i];
      sxy += log_n[i] * log_edges[i];
    }
    const double k = double(log_n.size());
    slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  csv << "slope," << (slope ? std::to_string(*slope) : "null") << ",\n";

  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    out << csv.str();
  } else {
    std::cout << csv.str();
  }
  return 0;
}

// Loads an edge list and, when every label is an integer (the format this
// tool writes), restores the original numeric vertex ids so artifacts that
// reference them stay aligned.
Graph load_graph_for_artifacts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file: " + path);
  auto loaded = load_edge_list(in);
  std::vector<std::size_t> ids;
  std::size_t max_id = 0;
  for (const auto& label : loaded.labels) {
    try {
      std::size_t pos = 0;
      std::size_t value = std::stoull(label, &pos);
      if (pos != label.size()) return loaded.graph;
      ids.push_back(value);
      max_id = std::max(max_id, value);
    } catch (const std::exception&) {
      return loaded.graph;
    }
  }
  Graph g(max_id + 1);
  for (auto [u, v] : loaded.graph.edges()) {
    g.add_edge(VertexId(ids[u]), VertexId(ids[v]));
  }
  return g;
}

int cmd_verify(const Options& opt) {
  Graph g = load_graph_for_artifacts(opt.graph_file);

  std::ifstream ain(opt.artifact);
  if (!ain) throw UsageError("cannot open artifact: " + opt.artifact);

  if (opt.kind == "emulator") {
    Emulator em;
    em.mode = parse_mode(opt.mode);
    const unsigned r = opt.r == 0 ? default_emulator_levels(g.n()) : opt.r;
    em.params = EmulatorParams::make(g.n(), opt.eps, r);
    em.additive_term = em.mode == EmulatorMode::kIdeal
                           ? em.params.additive_ideal()
                           : em.params.additive_table();
    std::string line;
    while (std::getline(ain, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      EmulatorEdge e;
      unsigned long long u, v, w;
      std::string rule;
      if (!(ls >> u >> v >> w >> e.level >> rule)) {
        throw UsageError("bad emulator line: " + line);
      }
      e.u = VertexId(u);
      e.v = VertexId(v);
      e.w = Dist(w);
      em.edges.push_back(e);
    }
    auto check = verify_emulator(g, em);
    std::cout << (check.ok() ? "ok" : "FAIL") << " pairs="
              << check.checked_pairs << " violations="
              << check.stretch_violations + check.lower_violations << '\n';
    return check.ok() ? 0 : 1;
  }
  if (opt.kind == "estimates") {
    EstimateTable est(g.n());
    std::string line;
    std::getline(ain, line);  // header
    while (std::getline(ain, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string cell;
      std::vector<std::string> cells;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      if (cells.size() != 3) throw UsageError("bad estimate line: " + line);
      auto u = VertexId(std::stoul(cells[0]));
      auto v = VertexId(std::stoul(cells[1]));
      auto val = Dist(std::stoull(cells[2]));
      est.update_min(u, v, val, EstimateTag::kUnset);
      est.update_min(v, u, val, EstimateTag::kUnset);
    }
    auto report = verify_estimates(g, est, opt.mult, opt.add);
    std::cout << (report.ok() ? "ok" : "FAIL") << " pairs="
              << report.checked_pairs << " lower="
              << report.lower_violations << " upper="
              << report.upper_violations << '\n';
    return report.ok() ? 0 : 1;
  }
  throw UsageError("unknown artifact kind: " + opt.kind);
}

void apply_config_file(const std::string& path, Options* opt) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config: " + path);
  json cfg = json::parse(in);
  auto get = [&cfg](const char* key, auto* field) {
    if (cfg.contains(key)) *field = cfg[key].get<std::decay_t<decltype(*field)>>();
  };
  get("algo", &opt->algo);
  get("graph", &opt->graph);
  get("graph_file", &opt->graph_file);
  get("n", &opt->n);
  get("p", &opt->p);
  get("rows", &opt->rows);
  get("cols", &opt->cols);
  get("eps", &opt->eps);
  get("r", &opt->r);
  get("mode", &opt->mode);
  get("build", &opt->build);
  get("t", &opt->t);
  get("k", &opt->k);
  get("seed", &opt->seed);
  get("reps", &opt->reps);
  get("sources", &opt->sources);
  get("delta", &opt->delta);
  get("out", &opt->out);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::string config_path;

  CLI::App app{"congested-clique shortest-path pipelines"};
  app.require_subcommand(1);

  // Pre-scan for --config so file values become defaults CLI flags override.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  }
  try {
    if (!config_path.empty()) apply_config_file(config_path, &opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--graph", opt.graph,
                    "gnp|path|cycle|grid|complete|barbell|file");
    sub->add_option("--graph-file", opt.graph_file, "edge list path");
    sub->add_option("--n", opt.n, "vertex count");
    sub->add_option("--p", opt.p, "gnp edge probability (<0: n^-3/4)");
    sub->add_option("--rows", opt.rows, "grid rows");
    sub->add_option("--cols", opt.cols, "grid cols");
    sub->add_option("--eps", opt.eps, "approximation epsilon");
    sub->add_option("--r", opt.r, "emulator levels (0: auto)");
    sub->add_option("--mode", opt.mode,
                    "ideal|clique|clique_whp|deterministic");
    sub->add_option("--build", opt.build, "randomized|deterministic");
    sub->add_option("--t", opt.t, "distance bound");
    sub->add_option("--k", opt.k, "table width");
    sub->add_option("--seed", opt.seed, "base seed");
    sub->add_option("--out", opt.out, "report path (default: stdout)");
  };

  auto* run = app.add_subcommand("run", "run one pipeline and verify it");
  add_common(run);
  run->add_option("--algo", opt.algo,
                  "emulator|hopset|knearest|mssp|apsp1|apsp2|softhit");
  run->add_option("--reps", opt.reps, "repetitions (seeds seed+i)");
  run->add_option("--sources", opt.sources, "mssp source count (0: sqrt n)");
  run->add_option("--delta", opt.delta, "soft-hitting delta");
  run->add_option("--ledger-csv", opt.ledger_csv, "write ledger CSV");
  run->add_option("--save-graph", opt.save_graph, "write the graph used");
  run->add_option("--artifact", opt.artifact, "write the build artifact");

  auto* sweep = app.add_subcommand("sweep", "emulator size scaling across n");
  add_common(sweep);
  sweep->add_option("--n-list", opt.n_list, "vertex counts")->delimiter(',');
  sweep->add_option("--seeds", opt.seeds, "seeds per n");

  auto* verify = app.add_subcommand("verify", "re-check a dumped artifact");
  add_common(verify);
  verify->add_option("--kind", opt.kind, "emulator|estimates");
  verify->add_option("--artifact", opt.artifact, "artifact path")->required();
  verify->add_option("--mult", opt.mult, "multiplicative bound");
  verify->add_option("--add", opt.add, "additive bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
