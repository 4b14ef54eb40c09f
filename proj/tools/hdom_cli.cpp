#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hdom/bounds.hpp"
#include "hdom/coloring.hpp"
#include "hdom/domination.hpp"
#include "hdom/extremal.hpp"
#include "hdom/io.hpp"
#include "hdom/verify.hpp"

namespace {

using hdom::CapExceeded;
using hdom::InputError;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Execution details (threads, timings) stay out of `parameters` so reruns
// with a different --threads emit identical bytes apart from elapsed_ms.
json make_manifest(const std::string& command, json parameters,
                   const std::vector<std::string>& outputs, std::int64_t elapsed_ms) {
  json m;
  m["command"] = command;
  m["parameters"] = std::move(parameters);
  if (m["parameters"].contains("seed")) m["seed"] = m["parameters"]["seed"];
  m["versions"] = {{"hdom", hdom::kVersion}, {"format", hdom::kFormatVersion}};
  m["elapsed_ms"] = elapsed_ms;
  m["outputs"] = outputs;
  return m;
}

void emit_text(const std::string& out_path, const std::string& payload) {
  if (out_path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write '" + out_path + "'");
  f << payload;
}

void emit_json(const std::string& out_path, const json& j) {
  emit_text(out_path, j.dump(2) + "\n");
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

using hdom::Hypergraph;
using hdom::Orientation;

std::shared_ptr<const Hypergraph> load_hypergraph(const std::string& path) {
  return std::make_shared<const Hypergraph>(hdom::read_hypergraph_file(path));
}

// ---- gen ----

struct GenArgs {
  std::string kind;
  std::uint64_t n = 0;
  unsigned r = 0;
  std::uint64_t m = 0;
  bool m_given = false;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int run_gen(const GenArgs& a) {
  Stopwatch timer;
  Hypergraph h = [&] {
    if (a.kind == "complete") return Hypergraph::complete(a.n, a.r);
    if (!a.m_given) throw std::invalid_argument("gen random requires -m");
    return Hypergraph::random(a.n, a.r, a.m, a.seed);
  }();
  json params = {{"kind", a.kind}, {"n", a.n}, {"r", a.r}};
  if (a.kind == "random") {
    params["m"] = a.m;
    params["seed"] = a.seed;
  }
  json manifest = make_manifest("gen", params, {a.out}, timer.ms());
  std::ostringstream body;
  hdom::write_hypergraph_text(body, h, {"manifest: " + manifest.dump()});
  emit_text(a.out, body.str());
  return kExitOk;
}

// ---- orient ----

struct OrientArgs {
  std::string hypergraph;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int run_orient(const OrientArgs& a) {
  Stopwatch timer;
  auto h = load_hypergraph(a.hypergraph);
  Orientation d = Orientation::random(h, a.seed);
  json manifest = make_manifest(
      "orient", {{"hypergraph", a.hypergraph}, {"seed", a.seed}}, {a.out}, timer.ms());
  std::ostringstream body;
  hdom::write_orientation_text(body, d, {"manifest: " + manifest.dump()});
  emit_text(a.out, body.str());
  return kExitOk;
}

// ---- solve ----

struct SolveArgs {
  std::string hypergraph;
  std::string orientation;
  std::optional<std::uint64_t> random_seed;
  unsigned p = 1;
  bool greedy = false;
  std::uint64_t budget = hdom::kDefaultNodeBudget;
  std::string out = "-";
};

int run_solve(const SolveArgs& a) {
  Stopwatch timer;
  auto h = load_hypergraph(a.hypergraph);
  if (a.orientation.empty() == !a.random_seed)
    throw std::invalid_argument("provide exactly one of --orientation / --random-orientation");
  Orientation d = a.random_seed ? Orientation::random(h, *a.random_seed)
                                : hdom::read_orientation_file(a.orientation, h);

  hdom::DominationCertificate cert{hdom::VertexSet(h->num_vertices()), {}};
  hdom::SolveStats stats;
  if (a.greedy) {
    cert = hdom::greedy_dominating_set(d, a.p);
    stats.best_found = cert.dominating_set.size();
    stats.proven_optimal = false;
  } else {
    std::tie(cert, stats) = hdom::min_directed_dominating(d, a.p, a.budget);
  }

  json params = {{"hypergraph", a.hypergraph},
                 {"p", a.p},
                 {"mode", a.greedy ? "greedy" : "exact"}};
  if (a.random_seed) params["seed"] = *a.random_seed;
  else params["orientation"] = a.orientation;
  if (!a.greedy) params["budget"] = a.budget;

  json witnesses = json::object();
  for (auto [u, e] : cert.witnesses) witnesses[std::to_string(u)] = e;
  json out;
  out["manifest"] = make_manifest("solve", params, {a.out}, timer.ms());
  out["gamma"] = cert.dominating_set.size();
  out["set"] = cert.dominating_set.members();
  out["witnesses"] = witnesses;
  out["proven_optimal"] = stats.proven_optimal;
  out["nodes_explored"] = stats.nodes_explored;
  out["elapsed_ms"] = timer.ms();
  emit_json(a.out, out);
  return kExitOk;
}

// ---- gamma-upper ----

struct GammaUpperArgs {
  std::string hypergraph;
  unsigned p = 1;
  bool exact = false;
  bool search = false;
  std::uint64_t cap = 100'000'000;
  unsigned threads = 1;
  hdom::SearchConfig cfg;
  std::string out = "-";
  std::string witness_out;
  std::string trace_out;
};

int run_gamma_upper(const GammaUpperArgs& a) {
  Stopwatch timer;
  if (a.exact == a.search)
    throw std::invalid_argument("choose exactly one of --exact / --search");
  auto h = load_hypergraph(a.hypergraph);

  std::ostringstream trace_csv;
  trace_csv << "restart,step,value\n";
  hdom::ExtremalResult res =
      a.exact ? hdom::gamma_upper_exact(h, a.p, a.cap, a.threads)
              : hdom::gamma_upper_search(h, a.p, a.cfg, a.threads,
                                         [&](std::uint32_t restart, std::uint32_t step,
                                             std::size_t value) {
                                           trace_csv << restart << ',' << step << ','
                                                     << value << '\n';
                                         });

  json params = {{"hypergraph", a.hypergraph}, {"p", a.p},
                 {"mode", a.exact ? "exact" : "search"}};
  if (a.exact) {
    params["cap"] = a.cap;
  } else {
    params["seed"] = a.cfg.seed;
    params["restarts"] = a.cfg.restarts;
    params["max_steps"] = a.cfg.max_steps;
    params["plateau_limit"] = a.cfg.plateau_limit;
    params["node_budget"] = a.cfg.node_budget;
  }
  std::vector<std::string> outputs = {a.out};
  if (!a.witness_out.empty()) outputs.push_back(a.witness_out);
  if (!a.trace_out.empty()) outputs.push_back(a.trace_out);
  json manifest = make_manifest("gamma-upper", params, outputs, timer.ms());

  json out;
  out["manifest"] = manifest;
  out["value"] = res.value;
  out["exact"] = res.exact;
  out["orientations_examined"] = res.orientations_examined;
  if (!a.witness_out.empty()) {
    std::ostringstream body;
    hdom::write_orientation_text(body, res.witness, {"manifest: " + manifest.dump()});
    emit_text(a.witness_out, body.str());
    out["witness_file"] = a.witness_out;
  } else {
    out["witness"] = {{"orders", res.witness.orders()}};
  }
  if (!a.trace_out.empty() && a.search) {
    emit_text(a.trace_out, "# manifest: " + manifest.dump() + "\n" + trace_csv.str());
  }
  out["elapsed_ms"] = timer.ms();
  emit_json(a.out, out);
  return kExitOk;
}

// ---- bounds ----

struct BoundsArgs {
  unsigned r = 2;
  std::uint64_t n_from = 0;
  std::uint64_t n_to = 0;
  std::optional<unsigned> p;
  std::string format = "csv";
  std::string out = "-";
};

int run_bounds(const BoundsArgs& a) {
  Stopwatch timer;
  if (a.n_to < a.n_from) throw std::invalid_argument("--n-to must be >= --n-from");
  unsigned p = a.p ? *a.p : a.r - 1;
  if (p < 1 || p > a.r - 1) throw std::invalid_argument("p must be in [1, r-1]");
  auto rows = hdom::bounds_table(a.r, a.n_from, a.n_to);

  json params = {{"r", a.r}, {"n_from", a.n_from}, {"n_to", a.n_to}, {"p", p}};
  json manifest = make_manifest("bounds", params, {a.out}, timer.ms());

  if (a.format == "json") {
    json jrows = json::array();
    for (const auto& row : rows) {
      json jr;
      jr["n"] = row.n;
      jr["thm2i_upper"] = row.thm2i_upper;
      jr["gpl_closed"] = row.gpl_closed ? json(*row.gpl_closed) : json(nullptr);
      jr["t_star"] = row.t_star ? json(*row.t_star) : json(nullptr);
      jr["certified_lower"] =
          row.certified_lower ? json(*row.certified_lower) : json(nullptr);
      jr["c_info"] = row.c_info;
      jrows.push_back(std::move(jr));
    }
    emit_json(a.out, json{{"manifest", manifest}, {"rows", jrows}});
    return kExitOk;
  }
  if (a.format != "csv") throw std::invalid_argument("--format must be csv or json");
  std::ostringstream csv;
  csv << "# manifest: " << manifest.dump() << "\n";
  csv << "n,thm2i_upper,gpl_closed,t_star,certified_lower,c_info\n";
  for (const auto& row : rows) {
    csv << row.n << ',' << format_double(row.thm2i_upper) << ',';
    if (row.gpl_closed) csv << format_double(*row.gpl_closed);
    csv << ',';
    if (row.t_star) csv << *row.t_star;
    csv << ',';
    if (row.certified_lower) csv << *row.certified_lower;
    csv << ',' << format_double(row.c_info) << '\n';
  }
  emit_text(a.out, csv.str());
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  hdom::SuiteOptions opt;
};

int run_verify(const VerifyArgs& a) {
  if (!hdom::is_suite(a.suite)) {
    std::cerr << "unknown suite '" << a.suite << "'; known:";
    for (const auto& s : hdom::suite_names()) std::cerr << ' ' << s;
    std::cerr << " all\n";
    return kExitUsage;
  }
  hdom::SuiteResult res = hdom::run_suite(a.suite, a.opt);
  for (const std::string& line : res.lines) std::cout << line << "\n";
  std::cout << "suite " << res.name << ": " << (res.pass ? "PASS" : "FAIL") << "\n";
  return res.pass ? kExitOk : kExitSuiteFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed p-domination in oriented r-uniform hypergraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "generate a hypergraph file");
  cgen->add_option("kind", gen.kind, "complete|random")
      ->required()
      ->check(CLI::IsMember({"complete", "random"}));
  cgen->add_option("-n", gen.n, "vertex count")->required();
  cgen->add_option("-r", gen.r, "uniformity")->required();
  auto* gen_m = cgen->add_option("-m", gen.m, "edge count (random)");
  cgen->add_option("--seed", gen.seed, "rng seed");
  cgen->add_option("-o,--out", gen.out, "output path, - for stdout");

  OrientArgs orient;
  auto* corient = app.add_subcommand("orient", "random orientation of a hypergraph");
  corient->add_option("-H,--hypergraph", orient.hypergraph, "hypergraph file")->required();
  corient->add_option("--seed", orient.seed, "rng seed");
  corient->add_option("-o,--out", orient.out, "output path");

  SolveArgs solve;
  auto* csolve = app.add_subcommand("solve", "minimum directed p-dominating set");
  csolve->add_option("-H,--hypergraph", solve.hypergraph, "hypergraph file")->required();
  csolve->add_option("--orientation", solve.orientation, "orientation file");
  std::uint64_t random_seed_storage = 0;
  auto* rnd = csolve->add_option("--random-orientation", random_seed_storage,
                                 "orient randomly with this seed");
  csolve->add_option("-p", solve.p, "prefix length")->required();
  csolve->add_flag("--greedy", solve.greedy, "greedy instead of exact");
  bool solve_exact_flag = false;
  csolve->add_flag("--exact", solve_exact_flag, "exact solve (default)");
  csolve->add_option("--budget", solve.budget, "node budget for the exact solver");
  csolve->add_option("-o,--out", solve.out, "output path");

  GammaUpperArgs gu;
  auto* cgu = app.add_subcommand("gamma-upper", "upper directed p-domination number");
  cgu->add_option("-H,--hypergraph", gu.hypergraph, "hypergraph file")->required();
  cgu->add_option("-p", gu.p, "prefix length")->required();
  cgu->add_flag("--exact", gu.exact, "full orientation enumeration");
  cgu->add_flag("--search", gu.search, "hill-climbing lower-bound search");
  cgu->add_option("--cap", gu.cap, "max orientations for --exact");
  cgu->add_option("--threads", gu.threads, "worker threads");
  cgu->add_option("--seed", gu.cfg.seed, "search seed");
  cgu->add_option("--restarts", gu.cfg.restarts, "search restarts");
  cgu->add_option("--max-steps", gu.cfg.max_steps, "steps per restart");
  cgu->add_option("--plateau", gu.cfg.plateau_limit, "allowed equal-value moves");
  cgu->add_option("--node-budget", gu.cfg.node_budget, "solver nodes per evaluation");
  cgu->add_option("--witness-out", gu.witness_out, "write witness orientation here");
  cgu->add_option("--trace-out", gu.trace_out, "write per-restart trace CSV here");
  cgu->add_option("-o,--out", gu.out, "output path");

  BoundsArgs bounds;
  auto* cbounds = app.add_subcommand("bounds", "analytic bound table over an n-range");
  cbounds->add_option("-r", bounds.r, "uniformity")->required();
  cbounds->add_option("--n-from", bounds.n_from, "first n")->required();
  cbounds->add_option("--n-to", bounds.n_to, "last n")->required();
  unsigned bounds_p = 0;
  auto* bp = cbounds->add_option("-p", bounds_p, "prefix length (default r-1)");
  cbounds->add_option("--format", bounds.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cbounds->add_option("-o,--out", bounds.out, "output path");
  unsigned bounds_threads = 1;
  cbounds->add_option("--threads", bounds_threads, "worker threads (table is serial)");

  VerifyArgs verify;
  auto* cverify = app.add_subcommand("verify", "run an invariant suite");
  cverify->add_option("suite", verify.suite, "suite name or 'all'")->required();
  cverify->add_option("--n", verify.opt.n, "instance vertex count override");
  cverify->add_option("--r", verify.opt.r, "instance uniformity override");
  cverify->add_option("--seed", verify.opt.seed, "rng seed");
  cverify->add_option("--samples", verify.opt.samples, "sample count override");
  cverify->add_option("--cap", verify.opt.cap, "enumeration cap");
  cverify->add_option("--threads", verify.opt.threads, "worker threads");

  // accepted everywhere for interface uniformity; serial commands ignore it
  unsigned ignored_threads = 1;
  cgen->add_option("--threads", ignored_threads, "");
  corient->add_option("--threads", ignored_threads, "");
  csolve->add_option("--threads", ignored_threads, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cgen) {
      gen.m_given = gen_m->count() > 0;
      return run_gen(gen);
    }
    if (*corient) return run_orient(orient);
    if (*csolve) {
      if (rnd->count()) solve.random_seed = random_seed_storage;
      return run_solve(solve);
    }
    if (*cgu) return run_gamma_upper(gu);
    if (*cbounds) {
      if (bp->count()) bounds.p = bounds_p;
      return run_bounds(bounds);
    }
    if (*cverify) return run_verify(verify);
  } catch (const CapExceeded& e) {
    json refusal = {{"error", "cap_exceeded"}, {"required", e.required}};
    std::cerr << refusal.dump() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
