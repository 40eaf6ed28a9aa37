#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lca {

using VertexId = std::uint32_t;

/// Unordered vertex pair stored canonically with u < v.
struct EdgeKey {
  VertexId u = 0;
  VertexId v = 0;

  /// Canonicalizes (a, b); throws CallerError when a == b.
  static EdgeKey of(VertexId a, VertexId b);

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct DirectedEdge {
  VertexId from = 0;
  VertexId to = 0;

  EdgeKey key() const { return EdgeKey::of(from, to); }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Immutable undirected simple graph in CSR form.
///
/// Neighbor lists keep the order fixed at construction: ascending by default,
/// or whatever permutation the builder applied. Probes index into this order.
class Graph {
 public:
  Graph() = default;

  /// Builds from CSR arrays, checking symmetry, range, self-loops and
  /// duplicate neighbors. offsets.size() must be n + 1.
  static Graph from_csr(std::vector<std::size_t> offsets, std::vector<VertexId> neighbors);

  std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const { return m_; }
  std::size_t max_degree() const { return max_degree_; }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  bool contains(VertexId v) const { return v < n(); }
  bool has_edge(VertexId a, VertexId b) const;

  /// Canonical edge list sorted by (u, v).
  std::vector<EdgeKey> edges() const;

  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const VertexId> adjacency() const { return adjacency_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::size_t m_ = 0;
  std::size_t max_degree_ = 0;
  bool sorted_lists_ = true;
};

/// Deduplicates, symmetrizes and sorts; rejects self-loops and endpoints >= n.
Graph build_graph(std::span<const std::pair<VertexId, VertexId>> edges, std::size_t n);
Graph build_graph(std::span<const EdgeKey> edges, std::size_t n);

bool is_forest(const Graph& g);

/// One direction per edge, stored sorted by canonical key.
class Orientation {
 public:
  Orientation() = default;
  /// Throws CallerError if two arcs share an endpoint pair.
  explicit Orientation(std::vector<DirectedEdge> arcs);

  std::span<const DirectedEdge> arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  std::optional<DirectedEdge> find(EdgeKey key) const;

  /// True iff the arcs cover exactly the edge set of g.
  bool covers(const Graph& g) const;

 private:
  std::vector<DirectedEdge> arcs_;
};

struct OutDegreeProfile {
  std::size_t max = 0;
  /// histogram[k] = number of vertices with out-degree k.
  std::vector<std::size_t> histogram;
};

OutDegreeProfile max_out_degree(const Orientation& o, std::size_t n);

}  // namespace lca
