#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lca/graph.hpp"
#include "lca/probe_oracle.hpp"
#include "lca/random_tape.hpp"

namespace lca {

enum class Algorithm { HighDegree, Medium, ColorForest, BoundedForest, VertexColor };

std::string_view to_string(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct OrientParams {
  std::uint64_t n = 0;           // vertex count the LCA assumes; 0 = the graph's
  std::uint64_t alpha = 1;       // declared arboricity
  std::uint64_t r = 1;           // out-degree target
  double c_sample = 1000.0;      // sampling constant of the medium-degree algorithm
  std::uint64_t max_degree = 0;  // declared max degree for bounded-forest; 0 = unknown
  std::uint32_t labels = 2;      // label count for vertex coloring
  bool lockstep = false;         // bounded-forest: alternate the two sides, stop once decided

  /// Throws CallerError on r, alpha, c_sample or labels below 1.
  void validate() const;
};

enum class VertexClass { Small, Medium, Large };

/// Small iff deg <= r; Large iff deg >= alpha n / s with s = r/10 (exact
/// rational comparison); Medium otherwise.
VertexClass classify_for_medium(std::uint64_t degree, std::uint64_t n, const OrientParams& p);

/// Large iff deg >= 5n/r.
bool is_large_for_color_forest(std::uint64_t degree, std::uint64_t n, const OrientParams& p);

/// ceil(c_sample * d * ln n / s), at least 1.
std::uint64_t medium_sample_count(std::uint64_t degree, std::uint64_t n, const OrientParams& p);

/// max(1, floor(r / 5)).
std::uint32_t color_forest_palette(const OrientParams& p);

/// True when r >= 10 (alpha^2 n)^(1/3), the range where the medium-degree
/// algorithm is guaranteed to succeed.
bool medium_guarantee_applies(std::uint64_t n, const OrientParams& p);

/// Two degree probes; higher degree points at lower, ties from higher id.
DirectedEdge orient_high_degree(ProbeSession& session, EdgeKey e);

/// Small/Medium/Large classification with neighbor sampling for
/// medium-medium edges. 2 probes, or 2 + 2k in the sampling case.
DirectedEdge orient_medium(ProbeSession& session, const RandomTape& tape, EdgeKey e, const OrientParams& p);

/// Forest only. Edges at a Large vertex point to it; every other edge takes
/// one of floor(r/5) colors and points toward the minimum id of its
/// monochromatic component, searched without entering Large vertices.
DirectedEdge orient_color_forest(ProbeSession& session, const RandomTape& tape, EdgeKey e, const OrientParams& p);

/// Forest only. Color from r colors, full scan of the monochromatic
/// component, point toward its minimum id. At most one out-edge per color.
DirectedEdge orient_bounded_forest(ProbeSession& session, const RandomTape& tape, EdgeKey e, const OrientParams& p);

/// Coordinates in {1, 2}; coordinate i is the parity class of v in its
/// label-i component, with the component's minimum id colored 1.
using VertexColor = std::vector<std::uint8_t>;

VertexColor color_forest(ProbeSession& session, const RandomTape& tape, VertexId v, const OrientParams& p);

/// Dispatch for the four edge algorithms; throws CallerError for VertexColor.
DirectedEdge orient_edge(Algorithm alg, ProbeSession& session, const RandomTape& tape, EdgeKey e,
                         const OrientParams& p);

}  // namespace lca
