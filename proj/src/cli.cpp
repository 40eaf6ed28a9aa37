#include "lca/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lca/edge_list.hpp"
#include "lca/errors.hpp"
#include "lca/graph_spec.hpp"
#include "lca/harness.hpp"
#include "lca/report.hpp"

namespace lca {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string command;
  std::string graph;
  std::string input;
  std::string alg;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t trials = 1;

  std::uint64_t n = 0;
  std::uint64_t alpha = 1;
  std::uint64_t r = 1;
  std::uint64_t delta = 0;
  double eps = 0.1;
  double c_sample = 1000.0;
  std::uint32_t labels = 2;
  std::uint64_t repeats = 0;
  bool lockstep = false;

  double p_keep = 0.0;
  std::uint32_t palette = 0;
  std::uint64_t max_exceed = 0;

  std::string strategy = "blind-id";
  std::uint64_t budget = 0;
  bool unlimited = false;

  std::string sweep;
  std::string r_mode = "fixed";
  double tolerance = 0.0;

  // Which optional flags were given.
  CLI::Option* n_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* palette_opt = nullptr;
  CLI::Option* max_exceed_opt = nullptr;
  CLI::Option* budget_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* tolerance_opt = nullptr;
};

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Source {
 public:
  explicit Source(const Options& o) {
    if (o.graph.empty() == o.input.empty()) throw CallerError("give exactly one of --graph and --input");
    if (!o.graph.empty()) {
      spec_ = GraphSpec::parse(o.graph);
      label_ = o.graph;
    } else {
      file_ = read_edge_list_file(o.input).graph;
      label_ = o.input;
    }
  }

  BuiltGraph build(std::uint64_t seed) const {
    if (spec_) return build_from_spec(*spec_, seed);
    BuiltGraph out;
    out.graph = file_;
    out.declared_max_degree = file_.max_degree();
    return out;
  }

  const std::string& label() const { return label_; }

 private:
  std::optional<GraphSpec> spec_;
  Graph file_;
  std::string label_;
};

OrientParams params_for(const Options& o, const BuiltGraph& built) {
  OrientParams p;
  p.n = given(o.n_opt) ? o.n : 0;
  p.alpha = given(o.alpha_opt) ? o.alpha : built.declared_alpha;
  p.r = o.r;
  p.c_sample = o.c_sample;
  p.max_degree = given(o.delta_opt) ? o.delta : 0;
  p.labels = o.labels;
  p.lockstep = o.lockstep;
  p.validate();
  return p;
}

json envelope(const Options& o, const std::string& source) {
  json seeds = json::array();
  for (std::uint64_t i = 0; i < o.trials; ++i) seeds.push_back(o.seed + i);
  return {{"schema", kReportSchema},
          {"version", version_string()},
          {"command", o.command},
          {"graph", source},
          {"seed", o.seed},
          {"seeds", seeds},
          {"trials", json::array()}};
}

void emit(const Options& o, const json& report, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw CallerError("cannot write " + o.out_path);
    sink = &file;
  }
  if (o.format == "csv") {
    write_csv(*sink, report);
  } else {
    *sink << report.dump(2) << "\n";
  }
}

Algorithm edge_algorithm(const std::string& name) {
  const auto alg = parse_algorithm(name);
  if (!alg) throw CallerError("unknown algorithm '" + name + "'");
  if (*alg == Algorithm::VertexColor) throw CallerError("vertex-color is a vertex query; use the color command");
  return *alg;
}

int cmd_orient(const Options& o, std::ostream& out) {
  const Algorithm alg = edge_algorithm(o.alg);
  const Source source(o);
  json report = envelope(o, source.label());
  json timing = json::array();
  json first_params;
  bool all_passed = true;
  std::size_t worst_out = 0;
  std::uint64_t worst_probes = 0;
  for (std::uint64_t i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed + i;
    const auto start = Clock::now();
    const BuiltGraph built = source.build(seed);
    const OrientParams params = params_for(o, built);
    RunOptions options;
    options.source = source.label();
    auto run = run_orientation(built.graph, alg, params, seed, options);
    if (i == 0) first_params = to_json(params);
    json trial = to_json(run.report);
    trial["trial"] = i;
    if (o.repeats > 0) {
      const auto c = consistency_check(built.graph, alg, params, seed, o.repeats);
      trial["consistency"] = {{"repeats", o.repeats}, {"queries", c.queries}, {"mismatches", c.mismatches}};
      trial["verdicts"]["consistent"] = c.consistent;
      trial["passed"] = trial["passed"].get<bool>() && c.consistent;
    }
    all_passed = all_passed && trial["passed"].get<bool>();
    worst_out = std::max(worst_out, run.report.max_out_degree);
    worst_probes = std::max(worst_probes, run.report.probes_total.max);
    report["trials"].push_back(std::move(trial));
    timing.push_back(ms_since(start));
  }
  report["params"] = first_params;
  report["summary"] = {{"all_passed", all_passed},
                       {"max_out_degree", worst_out},
                       {"max_probes_per_query", worst_probes}};
  report["timing"] = {{"timestamp", utc_timestamp()}, {"wall_ms", timing}};
  emit(o, report, out);
  return all_passed ? kExitOk : kExitViolated;
}

int cmd_color(const Options& o, std::ostream& out) {
  const Source source(o);
  json report = envelope(o, source.label());
  json timing = json::array();
  std::size_t worst_colors = 0;
  std::uint64_t worst_probes = 0;
  bool all_passed = true;
  for (std::uint64_t i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed + i;
    const auto start = Clock::now();
    const BuiltGraph built = source.build(seed);
    RunOptions options;
    options.source = source.label();
    const auto run = run_coloring(built.graph, params_for(o, built), seed, options);
    json trial = to_json(run.report);
    trial["trial"] = i;
    all_passed = all_passed && run.report.passed();
    worst_colors = std::max(worst_colors, run.report.colors_used);
    worst_probes = std::max(worst_probes, run.report.probes_total.max);
    report["trials"].push_back(std::move(trial));
    timing.push_back(ms_since(start));
  }
  report["params"] = {{"labels", o.labels}};
  report["summary"] = {{"all_passed", all_passed},
                       {"max_colors_used", worst_colors},
                       {"max_probes_per_query", worst_probes}};
  report["timing"] = {{"timestamp", utc_timestamp()}, {"wall_ms", timing}};
  emit(o, report, out);
  return all_passed ? kExitOk : kExitViolated;
}

int cmd_census(const Options& o, std::ostream& out) {
  if (given(o.p_opt) == given(o.palette_opt)) throw CallerError("give exactly one of --p and --palette");
  if (given(o.palette_opt) && o.palette == 0) throw CallerError("--palette must be >= 1");
  const Source source(o);
  json report = envelope(o, source.label());
  json timing = json::array();
  CensusSpec spec{given(o.palette_opt) ? o.palette : 0u, o.p_keep};
  std::size_t exceedances = 0;
  std::size_t largest = 0;
  for (std::uint64_t i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed + i;
    const auto start = Clock::now();
    const BuiltGraph built = source.build(seed);
    if (!is_forest(built.graph)) throw PreconditionError("census requires a forest input");
    const std::size_t delta = given(o.delta_opt) ? o.delta : built.declared_max_degree;
    const auto census = component_census(built.graph, spec, seed, delta, o.eps);
    json trial = to_json(census);
    trial["trial"] = i;
    trial["seed"] = seed;
    if (!census.within_bound) ++exceedances;
    largest = std::max(largest, census.max_component);
    report["trials"].push_back(std::move(trial));
    timing.push_back(ms_since(start));
  }
  report["params"] = {{"p", spec.palette == 0 ? json(o.p_keep) : json(nullptr)},
                      {"palette", spec.palette},
                      {"epsilon", o.eps}};
  report["summary"] = {{"exceedances", exceedances}, {"max_component", largest}};
  if (given(o.max_exceed_opt)) report["summary"]["max_exceedances"] = o.max_exceed;
  report["timing"] = {{"timestamp", utc_timestamp()}, {"wall_ms", timing}};
  emit(o, report, out);
  return given(o.max_exceed_opt) && exceedances > o.max_exceed ? kExitViolated : kExitOk;
}

int cmd_attack(const Options& o, std::ostream& out) {
  if (o.graph.empty()) throw CallerError("attack needs --instance adv:...");
  const GraphSpec spec = GraphSpec::parse(o.graph);
  const bool blind = o.strategy == "blind-id";
  Algorithm alg = Algorithm::ColorForest;
  if (!blind) alg = edge_algorithm(o.strategy);

  json report = envelope(o, o.graph);
  json timing = json::array();
  double sum_out = 0;
  std::size_t below_r = 0;
  std::size_t fallbacks = 0;
  std::uint64_t target_r = 0;
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed + i;
    const auto start = Clock::now();
    AttackReport attack;
    AdversarialLayout layout;
    if (blind) {
      layout = adversarial_layout_from_spec(spec, seed);
      attack = blind_attack(layout);
    } else {
      BuiltGraph built = build_from_spec(spec, seed);
      AdversarialInstance inst{std::move(*built.layout), std::move(built.graph)};
      AttackStrategy strategy;
      strategy.blind = false;
      strategy.algorithm = alg;
      strategy.params = params_for(o, built);
      strategy.params.r = given(o.r_opt) ? o.r : inst.layout.r;
      const std::uint64_t n_ref = inst.layout.target_n != 0 ? inst.layout.target_n : inst.layout.vertex_count;
      if (!o.unlimited) strategy.budget = given(o.budget_opt) ? o.budget : default_attack_budget(n_ref, strategy.params.r);
      attack = adversarial_attack(inst, strategy, seed);
      layout = std::move(inst.layout);
    }
    target_r = given(o.r_opt) ? o.r : layout.r;
    s = layout.s;
    sum_out += static_cast<double>(attack.center_out_degree);
    if (attack.center_out_degree < target_r) ++below_r;
    fallbacks += attack.fallbacks;
    json trial = to_json(attack);
    trial["trial"] = i;
    trial["seed"] = seed;
    trial["instance"] = to_json(layout);
    report["trials"].push_back(std::move(trial));
    timing.push_back(ms_since(start));
  }
  report["params"] = {{"strategy", o.strategy}, {"r", target_r}, {"unlimited_budget", o.unlimited}};
  report["summary"] = {{"mean_center_out_degree", o.trials ? sum_out / static_cast<double>(o.trials) : 0.0},
                       {"blind_expectation", static_cast<double>(s) / 2.0},
                       {"trials_center_below_r", below_r},
                       {"fallbacks", fallbacks}};
  report["timing"] = {{"timestamp", utc_timestamp()}, {"wall_ms", timing}};
  emit(o, report, out);
  return kExitOk;
}

std::vector<std::uint64_t> parse_sweep(const std::string& text) {
  std::vector<std::uint64_t> ns;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw CallerError("--sweep expects comma-separated integers");
    ns.push_back(value);
  }
  if (ns.size() < 4) throw CallerError("scaling needs at least 4 sweep points");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw CallerError("--sweep must be strictly increasing");
  return ns;
}

int cmd_scaling(const Options& o, std::ostream& out) {
  const Algorithm alg = edge_algorithm(o.alg);
  if (o.graph.empty()) throw CallerError("scaling needs --graph with the n key left out");
  const std::vector<std::uint64_t> ns = parse_sweep(o.sweep);
  GraphSpec base = GraphSpec::parse(o.graph);
  if (base.has("n")) throw CallerError("scaling: leave n out of --graph; it comes from --sweep");
  if (o.r_mode != "fixed" && o.r_mode != "sqrt") throw CallerError("--r-mode is fixed or sqrt");

  json report = envelope(o, o.graph);
  json timing = json::array();
  json points = json::array();
  json warnings = json::array();
  std::vector<double> xs, ys;
  std::size_t delta = 0;
  for (const std::uint64_t n : ns) {
    GraphSpec spec = base;
    spec.args["n"] = n;
    spec.text = base.text + (base.args.empty() ? ":" : ",") + "n=" + std::to_string(n);
    json per_trial = json::array();
    double sum = 0;
    for (std::uint64_t i = 0; i < o.trials; ++i) {
      const std::uint64_t seed = o.seed + i;
      const auto start = Clock::now();
      const BuiltGraph built = build_from_spec(spec, seed);
      OrientParams params = params_for(o, built);
      if (o.r_mode == "sqrt") params.r = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      RunOptions options;
      options.source = spec.text;
      const auto run = run_orientation(built.graph, alg, params, seed, options);
      if (!run.report.passed()) warnings.push_back("guarantee violated at n=" + std::to_string(n));
      delta = std::max(delta, given(o.delta_opt) ? static_cast<std::size_t>(o.delta) : built.declared_max_degree);
      const auto max_probes = run.report.probes_total.max;
      sum += static_cast<double>(max_probes);
      per_trial.push_back({{"seed", seed},
                           {"max_probes", max_probes},
                           {"mean_probes", run.report.probes_total.mean},
                           {"max_out_degree", run.report.max_out_degree}});
      json trial = {{"n", n}, {"seed", seed}, {"max_probes", max_probes}, {"r", params.r}};
      report["trials"].push_back(std::move(trial));
      timing.push_back(ms_since(start));
    }
    const double mean = o.trials ? sum / static_cast<double>(o.trials) : 0.0;
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::max(mean, 1.0));
    points.push_back({{"n", n}, {"mean_max_probes", mean}, {"trials", per_trial}});
  }

  const double slope = loglog_slope(xs, ys);
  json theory = nullptr;
  if (alg == Algorithm::BoundedForest && o.r_mode == "fixed" && delta >= 2) theory = bounded_forest_exponent(delta, o.r);
  if (alg == Algorithm::HighDegree) theory = 0.0;
  const double ratio0 = xs[1] / xs[0];
  for (std::size_t i = 2; i < xs.size(); ++i)
    if (std::abs(xs[i] / xs[i - 1] / ratio0 - 1.0) > 0.1) {
      warnings.push_back("sweep is not geometric");
      break;
    }

  bool ok = true;
  report["params"] = {{"algorithm", o.alg}, {"r", o.r}, {"r_mode", o.r_mode}, {"delta", delta}};
  report["points"] = points;
  report["summary"] = {{"slope", slope}, {"theoretical_slope", theory}, {"warnings", warnings}};
  if (given(o.tolerance_opt) && !theory.is_null()) {
    ok = std::abs(slope - theory.get<double>()) <= o.tolerance;
    report["summary"]["tolerance"] = o.tolerance;
    report["summary"]["within_tolerance"] = ok;
  }
  report["timing"] = {{"timestamp", utc_timestamp()}, {"wall_ms", timing}};
  emit(o, report, out);
  return ok ? kExitOk : kExitViolated;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Source source(o);
  const BuiltGraph built = source.build(o.seed);
  json meta = {{"schema", kReportSchema},
               {"version", version_string()},
               {"command", "gen"},
               {"graph", source.label()},
               {"seed", o.seed},
               {"n", built.graph.n()},
               {"m", built.graph.m()},
               {"max_degree", built.graph.max_degree()},
               {"is_forest", is_forest(built.graph)}};
  if (built.layout) meta["instance"] = to_json(*built.layout);
  if (o.out_path.empty()) {
    write_edge_list(out, built.graph);
    return kExitOk;
  }
  std::ofstream file(o.out_path);
  if (!file) throw CallerError("cannot write " + o.out_path);
  write_edge_list(file, built.graph);
  out << meta.dump(2) << "\n";
  return kExitOk;
}

void add_graph_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph", o.graph, "generator spec name:key=value,...");
  cmd->add_option("--input", o.input, "edge-list file");
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_path, "output path (default stdout)");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_trials(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "base seed; trial i uses seed + i");
  cmd->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
}

void add_params(CLI::App* cmd, Options& o) {
  o.n_opt = cmd->add_option("--n", o.n, "vertex count the LCA assumes (default: the graph's)");
  o.alpha_opt = cmd->add_option("--alpha", o.alpha, "declared arboricity");
  o.r_opt = cmd->add_option("--r", o.r, "out-degree target");
  o.delta_opt = cmd->add_option("--delta", o.delta, "declared maximum degree");
  cmd->add_option("--c-sample", o.c_sample, "sampling constant of the medium algorithm");
  cmd->add_option("--labels", o.labels, "label count for vertex coloring");
  cmd->add_flag("--lockstep", o.lockstep, "bounded-forest: alternate both sides and stop once decided");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local computation algorithms for forest orientation and coloring", "lcaorient"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version_string()));
  app.footer(graph_spec_help());

  auto* orient = app.add_subcommand("orient", "orient every edge with an LCA");
  add_graph_source(orient, o);
  add_trials(orient, o);
  add_params(orient, o);
  add_output(orient, o);
  orient->add_option("--alg", o.alg, "high-degree | medium | color-forest | bounded-forest")->required();
  orient->add_option("--repeats", o.repeats, "re-run 1000 sampled queries this many times");

  auto* color = app.add_subcommand("color", "2^labels-color a forest vertex by vertex");
  add_graph_source(color, o);
  add_trials(color, o);
  add_params(color, o);
  add_output(color, o);

  auto* census = app.add_subcommand("census", "monochromatic or percolated component sizes");
  add_graph_source(census, o);
  add_trials(census, o);
  add_output(census, o);
  o.p_opt = census->add_option("--p", o.p_keep, "keep probability")->check(CLI::Range(0.0, 1.0));
  o.palette_opt = census->add_option("--palette", o.palette, "color count instead of percolation");
  census->add_option("--eps", o.eps, "slack in the size bound");
  o.delta_opt = census->add_option("--delta", o.delta, "declared maximum degree");
  o.max_exceed_opt = census->add_option("--max-exceed", o.max_exceed, "exit 1 above this many exceedances");

  auto* attack = app.add_subcommand("attack", "orient the red star of a lower-bound instance");
  attack->add_option("--instance", o.graph, "adv:r=..,n=.. or adv:s=..,t=..")->required();
  add_trials(attack, o);
  add_output(attack, o);
  attack->add_option("--strategy", o.strategy, "blind-id or an orientation algorithm");
  o.r_opt = attack->add_option("--r", o.r, "out-degree target (default: the instance's r)");
  o.alpha_opt = attack->add_option("--alpha", o.alpha, "declared arboricity");
  attack->add_option("--c-sample", o.c_sample, "sampling constant of the medium algorithm");
  o.budget_opt = attack->add_option("--budget", o.budget, "probes per query (default 0.001 sqrt(n) / r)");
  attack->add_flag("--unlimited", o.unlimited, "no probe budget");

  auto* scaling = app.add_subcommand("scaling", "max probes per query over a sweep of n");
  scaling->add_option("--graph", o.graph, "generator spec without n")->required();
  add_trials(scaling, o);
  add_params(scaling, o);
  add_output(scaling, o);
  scaling->add_option("--alg", o.alg, "orientation algorithm")->required();
  scaling->add_option("--sweep", o.sweep, "comma-separated n values, at least 4")->required();
  scaling->add_option("--r-mode", o.r_mode, "fixed or sqrt (r = ceil(sqrt n) per point)");
  o.tolerance_opt = scaling->add_option("--tolerance", o.tolerance, "exit 1 when |slope - theory| exceeds this");

  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  add_graph_source(gen, o);
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--out", o.out_path, "edge-list path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    o.command = sub->get_name();
    if (sub == orient) return cmd_orient(o, out);
    if (sub == color) return cmd_color(o, out);
    if (sub == census) return cmd_census(o, out);
    if (sub == attack) return cmd_attack(o, out);
    if (sub == scaling) return cmd_scaling(o, out);
    return cmd_gen(o, out);
  } catch (const CallerError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotAForest& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BudgetExhausted& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::logic_error& e) {
    err << "violated: " << e.what() << "\n";
    return kExitViolated;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolated;
  }
}

}  // namespace lca
