#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lca/graph.hpp"
#include "lca/random_tape.hpp"

namespace lca {

/// Uniform labeled tree on n vertices via Pruefer decoding.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Random tree with max degree <= max_degree: vertex i attaches to a uniformly
/// chosen earlier vertex that still has spare degree. Labels are then
/// shuffled so ids carry no information about the attachment order.
Graph random_bounded_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed);

// Deterministic families.
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);                        // center 0
Graph complete_dary_tree(std::size_t d, std::size_t depth);  // depth 0 = single root
Graph kary_tree(std::size_t n, std::size_t d);               // heap-shaped, parent of i is (i-1)/d
Graph caterpillar(std::size_t spine, std::size_t legs);
Graph broom(std::size_t handle, std::size_t bristles);

/// Forest with a few high-degree hubs: hub 0 is adjacent to every other hub,
/// each hub is padded with pendant leaves up to hub_degree, and the remaining
/// vertices hang off random non-hub vertices. Hub ids are scattered at random.
Graph hub_forest(std::size_t n, std::size_t hubs, std::size_t hub_degree, std::uint64_t seed);

struct ForestUnion {
  Graph graph;
  /// Edge lists of the alpha random spanning trees; their union is graph.
  std::vector<std::vector<EdgeKey>> forests;
};

/// Union of alpha independent uniform spanning trees; arboricity <= alpha.
ForestUnion arboricity_union(std::size_t n, std::size_t alpha, std::uint64_t seed);

/// Same edges, every adjacency list independently shuffled.
Graph permute_adjacency(const Graph& g, const RandomTape& tape, std::string_view label = "permute");

/// Keeps each edge independently with probability p_keep.
std::vector<EdgeKey> percolate(const Graph& g, double p_keep, const RandomTape& tape,
                               std::string_view label = kPercolateLabel);

// ---------------------------------------------------------------------------
// Lower-bound instance.
//
// Vertex ids are laid out as  A | B | leaves of A-stars | leaves of B-stars.
// Black edges are the A-stars (st leaves each) and B-stars (t leaves each);
// red edges form an s-star from the center a0 into A' subset of A; blue edges
// pad every a in A to degree st+s, each b in B receiving exactly one.

struct AdversarialParams {
  std::uint64_t n = 0;  // target vertex bound; 0 in explicit mode
  std::uint64_t r = 1;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  std::uint64_t seed = 0;

  /// s = 24r, t = floor(sqrt(n) / 4s); requires t > 10 and total < n.
  static AdversarialParams derived(std::uint64_t n, std::uint64_t r, std::uint64_t seed);
  /// Any s >= 2, t >= 1 with st - 1 >= s.
  static AdversarialParams explicit_sizes(std::uint64_t s, std::uint64_t t, std::uint64_t seed, std::uint64_t r = 1);

  bool is_derived() const { return n != 0; }
};

/// Everything about an instance except the materialized black stars.
struct AdversarialLayout {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  std::uint64_t r = 1;
  std::uint64_t target_n = 0;
  std::uint64_t seed = 0;

  std::size_t a_count = 0;  // st
  std::size_t b_count = 0;  // s^2 t - 2s
  std::size_t vertex_count = 0;
  VertexId center = 0;
  std::vector<VertexId> red_leaves;  // A', sorted
  std::vector<EdgeKey> blue_edges;   // {a, b}, sorted

  bool in_a(VertexId v) const { return v < a_count; }
  bool in_b(VertexId v) const { return v >= a_count && v < a_count + b_count; }
  VertexId first_a_leaf() const { return static_cast<VertexId>(a_count + b_count); }
  VertexId first_b_leaf() const { return static_cast<VertexId>(a_count + b_count + a_count * s * t); }
  std::size_t black_edge_count() const { return a_count * s * t + b_count * t; }
  std::vector<EdgeKey> red_edges() const;
  /// Both endpoints in A or B, i.e. red or blue.
  bool is_colored(VertexId x, VertexId y) const { return x < a_count + b_count && y < a_count + b_count; }
};

struct AdversarialInstance {
  AdversarialLayout layout;
  Graph graph;  // adjacency lists uniformly permuted
};

AdversarialLayout sample_adversarial_layout(const AdversarialParams& p);
AdversarialInstance materialize(const AdversarialLayout& layout);
AdversarialInstance adversarial_instance(const AdversarialParams& p);

}  // namespace lca
