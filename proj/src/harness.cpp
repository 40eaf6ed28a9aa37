#include "lca/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lca/errors.hpp"
#include "lca/random_tape.hpp"

namespace lca {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string edge_name(EdgeKey e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

bool forest_only(Algorithm alg) {
  return alg == Algorithm::ColorForest || alg == Algorithm::BoundedForest || alg == Algorithm::VertexColor;
}

OrientParams resolve(OrientParams p, const Graph& g) {
  p.validate();
  if (p.n == 0) p.n = g.n();
  if (p.max_degree == 0) p.max_degree = g.max_degree();
  return p;
}

template <class Fn>
auto with_edge_context(EdgeKey e, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const NotAForest& ex) {
    throw NotAForest("query " + edge_name(e) + ": " + ex.what());
  } catch (const BudgetExhausted& ex) {
    throw BudgetExhausted("query " + edge_name(e) + ": " + ex.what());
  } catch (const CallerError& ex) {
    throw CallerError("query " + edge_name(e) + ": " + ex.what());
  }
}

void fill_probe_summaries(RunReport& report, const std::vector<ProbeStats>& per_query) {
  for (ProbeKind kind : kProbeKinds) report.probes_by_kind[static_cast<std::size_t>(kind)] = summarize(per_query, kind);
  report.probes_total = summarize(per_query, std::nullopt);
}

// At most one out-edge per (vertex, color) among the arcs accepted by `counts`.
template <class ColorOf>
bool one_out_edge_per_color(const Orientation& o, ColorOf&& color_of) {
  std::vector<std::pair<VertexId, std::uint64_t>> tails;
  tails.reserve(o.size());
  for (const auto& arc : o.arcs()) {
    const std::optional<std::uint64_t> c = color_of(arc);
    if (c) tails.emplace_back(arc.from, *c);
  }
  std::sort(tails.begin(), tails.end());
  return std::adjacent_find(tails.begin(), tails.end()) == tails.end();
}

}  // namespace

GraphDescriptor describe(const Graph& g, std::string source) {
  return {std::move(source), g.n(), g.m(), g.max_degree()};
}

bool RunReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

ProbeSummary summarize(const std::vector<ProbeStats>& per_query, std::optional<ProbeKind> kind) {
  ProbeSummary out;
  if (per_query.empty()) return out;
  std::vector<std::uint64_t> values;
  values.reserve(per_query.size());
  for (const auto& s : per_query) values.push_back(kind ? s[*kind] : s.total);
  std::sort(values.begin(), values.end());
  out.max = values.back();
  long double sum = 0;
  for (auto v : values) sum += v;
  out.mean = static_cast<double>(sum / values.size());
  const auto rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(values.size())));
  out.p99 = values[std::max<std::size_t>(rank, 1) - 1];
  return out;
}

std::size_t high_degree_bound(std::uint64_t n, std::uint64_t alpha) {
  const std::uint64_t x = 2 * alpha * n;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (root * root > x) --root;
  while ((root + 1) * (root + 1) <= x) ++root;
  return root * root == x ? root : root + 1;
}

OrientationRun run_orientation(const Graph& g, Algorithm alg, OrientParams params, std::uint64_t seed,
                               const RunOptions& options) {
  if (alg == Algorithm::VertexColor) throw CallerError("vertex-color runs through run_coloring");
  params = resolve(params, g);
  if (forest_only(alg) && !is_forest(g))
    throw PreconditionError(std::string(to_string(alg)) + " requires a forest input");

  const auto start = Clock::now();
  const RandomTape tape(seed, options.tape_domain);
  const auto edges = g.edges();
  std::vector<DirectedEdge> arcs(edges.size());
  std::vector<ProbeStats> per_query(edges.size());

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeKey e = edges[i];
    ProbeSession session(g);
    arcs[i] = with_edge_context(e, [&] { return orient_edge(alg, session, tape, e, params); });
    if (arcs[i].key() != e) throw std::logic_error("query " + edge_name(e) + " answered a different pair");
    per_query[i] = session.snapshot();
  }

  OrientationRun run;
  run.orientation = Orientation(std::move(arcs));
  RunReport& report = run.report;
  report.algorithm = std::string(to_string(alg));
  report.params = params;
  report.seed = seed;
  report.graph = describe(g, options.source);
  report.queries = edges.size();

  const OutDegreeProfile profile = max_out_degree(run.orientation, g.n());
  report.max_out_degree = profile.max;
  report.out_degree_histogram = profile.histogram;
  report.out_degree_bound = alg == Algorithm::HighDegree ? high_degree_bound(params.n, params.alpha) : params.r;

  report.verdicts["covers_all_edges"] = run.orientation.covers(g);
  report.verdicts["out_degree_within_bound"] = profile.max <= report.out_degree_bound;

  switch (alg) {
    case Algorithm::HighDegree: {
      bool rule = true;
      for (const auto& arc : run.orientation.arcs()) {
        const auto df = g.degree(arc.from), dt = g.degree(arc.to);
        rule = rule && (df > dt || (df == dt && arc.from > arc.to));
      }
      report.verdicts["degree_rule"] = rule;
      break;
    }
    case Algorithm::Medium:
      if (!medium_guarantee_applies(params.n, params))
        report.warnings.push_back("r below 10 (alpha^2 n)^(1/3); out-degree guarantee not claimed");
      break;
    case Algorithm::ColorForest: {
      const std::uint32_t palette = color_forest_palette(params);
      auto large = [&](VertexId v) { return is_large_for_color_forest(g.degree(v), params.n, params); };
      bool large_rule = true;
      for (const auto& arc : run.orientation.arcs())
        if ((large(arc.from) || large(arc.to)) && !large(arc.to)) large_rule = false;
      report.verdicts["large_edges_point_to_large"] = large_rule;
      report.verdicts["one_out_edge_per_color"] =
          one_out_edge_per_color(run.orientation, [&](const DirectedEdge& arc) -> std::optional<std::uint64_t> {
            if (large(arc.from) || large(arc.to)) return std::nullopt;
            return tape.edge_color(arc.key(), palette);
          });
      break;
    }
    case Algorithm::BoundedForest:
      if (params.r < params.max_degree) {
        const auto palette = static_cast<std::uint32_t>(params.r);
        report.verdicts["one_out_edge_per_color"] = one_out_edge_per_color(
            run.orientation,
            [&](const DirectedEdge& arc) -> std::optional<std::uint64_t> { return tape.edge_color(arc.key(), palette); });
      }
      break;
    case Algorithm::VertexColor: break;
  }

  fill_probe_summaries(report, per_query);
  report.wall_ms = elapsed_ms(start);
  if (options.keep_per_query) run.per_query = std::move(per_query);
  return run;
}

ColoringRun run_coloring(const Graph& g, OrientParams params, std::uint64_t seed, const RunOptions& options) {
  params = resolve(params, g);
  if (!is_forest(g)) throw PreconditionError("vertex-color requires a forest input");

  const auto start = Clock::now();
  const RandomTape tape(seed, options.tape_domain);
  ColoringRun run;
  run.colors.resize(g.n());
  std::vector<ProbeStats> per_query(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    ProbeSession session(g);
    run.colors[v] = color_forest(session, tape, static_cast<VertexId>(v), params);
    per_query[v] = session.snapshot();
  }

  for (const auto& e : g.edges()) {
    const auto label = tape.edge_color(e, params.labels, kVertexColorLabel);
    if (run.colors[e.u][label] == run.colors[e.v][label])
      throw std::logic_error("improper coloring: edge " + edge_name(e) + " has equal coordinate " + std::to_string(label));
  }

  RunReport& report = run.report;
  report.algorithm = std::string(to_string(Algorithm::VertexColor));
  report.params = params;
  report.seed = seed;
  report.graph = describe(g, options.source);
  report.queries = g.n();
  std::set<VertexColor> distinct(run.colors.begin(), run.colors.end());
  report.colors_used = distinct.size();
  report.verdicts["proper"] = true;
  const std::size_t palette = params.labels >= 63 ? ~std::size_t{0} : (std::size_t{1} << params.labels);
  report.verdicts["colors_within_palette"] = report.colors_used <= palette;
  fill_probe_summaries(report, per_query);
  report.wall_ms = elapsed_ms(start);
  return run;
}

ConsistencyResult consistency_check(const Graph& g, Algorithm alg, OrientParams params, std::uint64_t seed,
                                    std::size_t repeats, std::size_t samples, const std::string& repeat_domain) {
  params = resolve(params, g);
  const bool vertex_query = alg == Algorithm::VertexColor;
  const std::size_t universe = vertex_query ? g.n() : g.m();
  const auto edges = vertex_query ? std::vector<EdgeKey>{} : g.edges();

  std::vector<std::size_t> picks(universe);
  std::iota(picks.begin(), picks.end(), std::size_t{0});
  if (samples < universe) {
    const RandomTape sampler(seed);
    TapeStream rng(sampler, "consistency-sample");
    for (std::size_t i = 0; i < samples; ++i) std::swap(picks[i], picks[i + rng.below(universe - i)]);
    picks.resize(samples);
  }

  ConsistencyResult result;
  result.queries = picks.size();
  std::vector<DirectedEdge> first_arcs(picks.size());
  std::vector<VertexColor> first_colors(picks.size());
  for (std::size_t rep = 0; rep < std::max<std::size_t>(repeats, 1); ++rep) {
    const RandomTape tape(seed, rep > 0 ? repeat_domain : std::string{});
    for (std::size_t i = 0; i < picks.size(); ++i) {
      ProbeSession session(g);
      if (vertex_query) {
        auto c = color_forest(session, tape, static_cast<VertexId>(picks[i]), params);
        if (rep == 0) first_colors[i] = std::move(c);
        else if (c != first_colors[i]) ++result.mismatches;
      } else {
        const auto arc = orient_edge(alg, session, tape, edges[picks[i]], params);
        if (rep == 0) first_arcs[i] = arc;
        else if (arc != first_arcs[i]) ++result.mismatches;
      }
    }
  }
  result.consistent = result.mismatches == 0;
  return result;
}

PeelingResult peeling_baseline(const Graph& g, std::uint64_t alpha, double epsilon) {
  if (alpha < 1) throw CallerError("peeling: alpha must be >= 1");
  if (!(epsilon > 0.0)) throw CallerError("peeling: epsilon must be > 0");
  PeelingResult result;
  result.threshold = static_cast<std::size_t>(std::floor((2.0 + epsilon) * static_cast<double>(alpha)));

  const std::size_t n = g.n();
  std::vector<std::size_t> remaining(n);
  for (std::size_t v = 0; v < n; ++v) remaining[v] = g.degree(static_cast<VertexId>(v));
  // 0 = alive, 1 = peeled this round, 2 = gone
  std::vector<std::uint8_t> state(n, 0);
  std::vector<VertexId> alive(n);
  std::iota(alive.begin(), alive.end(), VertexId{0});
  std::vector<DirectedEdge> arcs;
  arcs.reserve(g.m());

  std::vector<VertexId> peel;
  while (!alive.empty()) {
    peel.clear();
    for (VertexId v : alive)
      if (remaining[v] <= result.threshold) peel.push_back(v);
    if (peel.empty())
      throw PreconditionError("peeling stalled with " + std::to_string(alive.size()) +
                              " vertices above degree " + std::to_string(result.threshold) +
                              "; declared arboricity " + std::to_string(alpha) + " is too small");
    ++result.rounds;
    for (VertexId v : peel) state[v] = 1;
    for (VertexId v : peel) {
      for (VertexId w : g.neighbors(v)) {
        if (state[w] == 2) continue;
        if (state[w] == 0 || v < w) arcs.push_back({v, w});
        if (state[w] == 0) --remaining[w];
      }
    }
    for (VertexId v : peel) state[v] = 2;
    std::erase_if(alive, [&](VertexId v) { return state[v] == 2; });
  }
  result.orientation = Orientation(std::move(arcs));
  return result;
}

double concentration_bound(std::size_t n, double p, std::size_t max_degree, double epsilon) {
  if (p <= 0.0) return 1.0;
  const double delta = static_cast<double>(std::max<std::size_t>(max_degree, 2));
  const double exponent = 1.0 + std::log(p) / std::log(delta) + epsilon;
  return std::pow(static_cast<double>(n), exponent);
}

ComponentCensus component_census(const Graph& g, const CensusSpec& spec, std::uint64_t seed, std::size_t max_degree,
                                 double epsilon) {
  if (spec.palette == 0 && !(spec.p_keep >= 0.0 && spec.p_keep <= 1.0))
    throw CallerError("census: p_keep must lie in [0, 1]");
  const RandomTape tape(seed);
  const std::size_t classes = spec.palette == 0 ? 1 : spec.palette;
  std::vector<std::vector<EdgeKey>> by_class(classes);
  if (spec.palette == 0) {
    by_class[0] = percolate(g, spec.p_keep, tape);
  } else {
    for (const auto& e : g.edges()) by_class[tape.edge_color(e, spec.palette)].push_back(e);
  }

  ComponentCensus census;
  census.p = spec.palette == 0 ? spec.p_keep : 1.0 / spec.palette;
  census.max_degree = max_degree;
  census.epsilon = epsilon;
  census.max_component = g.n() > 0 ? 1 : 0;

  std::vector<std::uint8_t> seen(g.n());
  std::vector<VertexId> queue;
  for (const auto& edges : by_class) {
    const Graph sub = build_graph(std::span<const EdgeKey>(edges), g.n());
    std::fill(seen.begin(), seen.end(), 0);
    auto& sizes = census.sizes_per_color.emplace_back();
    std::size_t touched = 0;
    for (std::size_t root = 0; root < sub.n(); ++root) {
      if (seen[root] || sub.degree(static_cast<VertexId>(root)) == 0) continue;
      queue.assign(1, static_cast<VertexId>(root));
      seen[root] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId w : sub.neighbors(queue[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
      sizes.push_back(queue.size());
      touched += queue.size();
      census.max_component = std::max(census.max_component, queue.size());
    }
    census.touched_per_color.push_back(touched);
  }
  census.bound = concentration_bound(g.n(), census.p, max_degree, epsilon);
  census.within_bound = static_cast<double>(census.max_component) <= census.bound;
  return census;
}

std::uint64_t default_attack_budget(std::uint64_t n, std::uint64_t r) {
  if (r == 0) throw CallerError("attack budget: r must be >= 1");
  return static_cast<std::uint64_t>(std::floor(0.001 * std::sqrt(static_cast<double>(n)) / static_cast<double>(r)));
}

std::size_t blind_center_out_degree(const AdversarialLayout& layout) {
  return static_cast<std::size_t>(std::count_if(layout.red_leaves.begin(), layout.red_leaves.end(),
                                                [&](VertexId a) { return a < layout.center; }));
}

AttackReport blind_attack(const AdversarialLayout& layout) {
  AttackReport report;
  report.strategy = "blind-id";
  report.budget = 0;
  report.red_edges = layout.red_leaves.size();
  report.center_out_degree = blind_center_out_degree(layout);
  return report;
}

AttackReport adversarial_attack(const AdversarialInstance& inst, const AttackStrategy& strategy, std::uint64_t seed) {
  const auto& layout = inst.layout;
  if (strategy.blind) return blind_attack(layout);
  if (strategy.algorithm == Algorithm::VertexColor) throw CallerError("attack: vertex-color is not an orientation");
  AttackReport report;
  report.strategy = std::string(to_string(strategy.algorithm));
  report.budget = strategy.budget;
  const auto red = layout.red_edges();
  report.red_edges = red.size();
  const OrientParams params = resolve(strategy.params, inst.graph);
  const RandomTape tape(seed);

  for (const EdgeKey e : red) {
    ProbeSession session(inst.graph, strategy.budget);
    bool saw_colored = false;
    session.set_observer([&](ProbeKind kind, VertexId v, std::uint64_t arg, std::uint64_t answer) {
      if (kind == ProbeKind::AdjacencyList && layout.is_colored(v, static_cast<VertexId>(answer))) saw_colored = true;
      if (kind == ProbeKind::AdjacencyMatrix && answer == 1 && layout.is_colored(v, static_cast<VertexId>(arg)))
        saw_colored = true;
    });
    DirectedEdge arc{e.v, e.u};  // blind-id fallback: toward the lower id
    try {
      arc = orient_edge(strategy.algorithm, session, tape, e, params);
    } catch (const BudgetExhausted&) {
      ++report.fallbacks;
    }
    const auto used = session.snapshot().total;
    report.max_probes = std::max(report.max_probes, used);
    report.total_probes += used;
    if (saw_colored) ++report.queries_seeing_colored;
    if (arc.from == layout.center) ++report.center_out_degree;
  }
  report.colored_edge_probed = report.queries_seeing_colored > 0;
  return report;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw CallerError("loglog_slope: need two or more paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw CallerError("loglog_slope: values must be positive");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw CallerError("loglog_slope: x values must not all be equal");
  return sxy / sxx;
}

double bounded_forest_exponent(std::uint64_t max_degree, std::uint64_t r) {
  if (max_degree < 2 || r < 1) throw CallerError("bounded_forest_exponent: needs max_degree >= 2 and r >= 1");
  return 1.0 - std::log(static_cast<double>(r)) / std::log(static_cast<double>(max_degree));
}

std::size_t brute_force_min_r(const Graph& g) {
  if (g.n() > 12 || g.m() > 16) throw CallerError("brute_force_min_r: input limited to 12 vertices and 16 edges");
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  if (m == 0) return 0;
  std::vector<std::size_t> out(g.n(), 0);
  for (const auto& e : edges) ++out[e.u];  // mask bit 0: u -> v; bit 1: v -> u
  std::size_t best = *std::max_element(out.begin(), out.end());
  std::uint64_t mask = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    const int bit = std::countr_zero(i);  // Gray code: flip one edge per step
    const EdgeKey e = edges[static_cast<std::size_t>(bit)];
    mask ^= std::uint64_t{1} << bit;
    if (mask >> bit & 1) {
      --out[e.u];
      ++out[e.v];
    } else {
      --out[e.v];
      ++out[e.u];
    }
    best = std::min(best, *std::max_element(out.begin(), out.end()));
  }
  return best;
}

}  // namespace lca
