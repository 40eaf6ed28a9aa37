#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lca/generators.hpp"
#include "lca/graph.hpp"
#include "lca/orient.hpp"
#include "lca/probe_oracle.hpp"

namespace lca {

struct GraphDescriptor {
  std::string source;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
};

GraphDescriptor describe(const Graph& g, std::string source);

struct ProbeSummary {
  std::uint64_t max = 0;
  double mean = 0.0;
  std::uint64_t p99 = 0;
};

struct RunReport {
  std::string algorithm;
  OrientParams params;
  std::uint64_t seed = 0;
  GraphDescriptor graph;
  std::size_t queries = 0;

  std::size_t max_out_degree = 0;
  std::vector<std::size_t> out_degree_histogram;
  std::size_t out_degree_bound = 0;  // what the algorithm promises

  std::size_t colors_used = 0;  // vertex coloring only

  std::array<ProbeSummary, 3> probes_by_kind{};
  ProbeSummary probes_total;

  std::map<std::string, bool> verdicts;
  std::vector<std::string> warnings;
  double wall_ms = 0.0;

  bool passed() const;
};

/// Max, mean and nearest-rank p99 of one counter over all queries.
ProbeSummary summarize(const std::vector<ProbeStats>& per_query, std::optional<ProbeKind> kind);

/// ceil(sqrt(2 alpha n)).
std::size_t high_degree_bound(std::uint64_t n, std::uint64_t alpha);

struct RunOptions {
  std::string source = "inline";
  /// Tape domain salt; non-empty only for negative-control runs.
  std::string tape_domain;
  bool keep_per_query = false;
};

struct OrientationRun {
  Orientation orientation;
  RunReport report;
  std::vector<ProbeStats> per_query;  // by canonical edge order, when kept
};

/// One fresh session per edge, shared tape, checks coverage and the
/// algorithm's out-degree promise. Forest-only algorithms get a global
/// is_forest precheck (PreconditionError). Per-edge errors are rethrown with
/// the edge attached.
OrientationRun run_orientation(const Graph& g, Algorithm alg, OrientParams params, std::uint64_t seed,
                               const RunOptions& options = {});

struct ColoringRun {
  std::vector<VertexColor> colors;
  RunReport report;
};

/// Queries every vertex independently and verifies properness; an improper
/// edge throws std::logic_error naming the witness.
ColoringRun run_coloring(const Graph& g, OrientParams params, std::uint64_t seed, const RunOptions& options = {});

struct ConsistencyResult {
  bool consistent = true;
  std::size_t queries = 0;
  std::size_t mismatches = 0;
};

/// Re-runs up to `samples` sampled queries `repeats` times with fresh
/// sessions. A non-empty `repeat_domain` salts the tape of every repeat after
/// the first, which must be detected as a mismatch for randomized algorithms.
ConsistencyResult consistency_check(const Graph& g, Algorithm alg, OrientParams params, std::uint64_t seed,
                                    std::size_t repeats, std::size_t samples = 1000,
                                    const std::string& repeat_domain = {});

struct PeelingResult {
  Orientation orientation;
  std::size_t rounds = 0;
  std::size_t threshold = 0;  // floor((2 + eps) alpha)
};

/// Global peeling: each round removes every vertex of remaining degree at
/// most (2 + eps) alpha and orients its remaining edges outward. Throws
/// PreconditionError when a round removes nothing.
PeelingResult peeling_baseline(const Graph& g, std::uint64_t alpha, double epsilon);

struct CensusSpec {
  /// palette > 0: color every edge from `palette` colors (same coloring as
  /// bounded-forest). palette == 0: percolation with probability p_keep.
  std::uint32_t palette = 0;
  double p_keep = 0.0;
};

struct ComponentCensus {
  /// Sizes (vertex counts) of components with at least one edge, per color.
  std::vector<std::vector<std::size_t>> sizes_per_color;
  std::vector<std::size_t> touched_per_color;
  std::size_t max_component = 0;  // isolated vertices count as size 1
  double p = 0.0;
  std::size_t max_degree = 0;
  double epsilon = 0.0;
  double bound = 0.0;  // n^(1 + log_Delta p + eps)
  bool within_bound = true;
};

ComponentCensus component_census(const Graph& g, const CensusSpec& spec, std::uint64_t seed, std::size_t max_degree,
                                 double epsilon);

/// n^(1 + log_Delta p + eps); 1 when p == 0.
double concentration_bound(std::size_t n, double p, std::size_t max_degree, double epsilon);

struct AttackStrategy {
  bool blind = true;
  Algorithm algorithm = Algorithm::ColorForest;
  OrientParams params;
  std::optional<std::uint64_t> budget;  // per query; nullopt = unlimited
};

struct AttackReport {
  std::string strategy;
  std::size_t red_edges = 0;
  std::size_t center_out_degree = 0;
  std::size_t fallbacks = 0;  // queries that ran out of budget
  std::uint64_t max_probes = 0;
  std::uint64_t total_probes = 0;
  std::size_t queries_seeing_colored = 0;
  bool colored_edge_probed = false;
  std::optional<std::uint64_t> budget;
};

/// floor(0.001 sqrt(n) / r), the probe count below which the lower bound applies.
std::uint64_t default_attack_budget(std::uint64_t n, std::uint64_t r);

/// Center out-degree under blind-id, read off the layout alone.
std::size_t blind_center_out_degree(const AdversarialLayout& layout);

/// Blind-id on the layout alone: every red edge points at its lower id.
AttackReport blind_attack(const AdversarialLayout& layout);

/// Orients the red star. Blind-id points every edge at its lower id with no
/// probes; an algorithm strategy runs under the budget and falls back to
/// blind-id when the budget runs out.
AttackReport adversarial_attack(const AdversarialInstance& inst, const AttackStrategy& strategy, std::uint64_t seed);

/// Least-squares slope of log y against log x; needs two or more points, all
/// positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// 1 - log_Delta r.
double bounded_forest_exponent(std::uint64_t max_degree, std::uint64_t r);

/// Exhaustive minimum max-out-degree over all 2^m orientations
/// (n <= 12, m <= 16).
std::size_t brute_force_min_r(const Graph& g);

}  // namespace lca
