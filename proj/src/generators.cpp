#include "lca/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lca/errors.hpp"

namespace lca {
namespace {

std::vector<EdgeKey> prufer_tree_edges(std::size_t n, TapeStream& rng) {
  std::vector<EdgeKey> edges;
  if (n <= 1) return edges;
  edges.reserve(n - 1);
  if (n == 2) {
    edges.push_back({0, 1});
    return edges;
  }
  std::vector<VertexId> code(n - 2);
  for (auto& x : code) x = static_cast<VertexId>(rng.below(n));

  // Linear-time decoding.
  std::vector<std::size_t> degree(n, 1);
  for (VertexId x : code) ++degree[x];
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (VertexId x : code) {
    edges.push_back(EdgeKey::of(static_cast<VertexId>(leaf), x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(EdgeKey::of(static_cast<VertexId>(leaf), static_cast<VertexId>(n - 1)));
  return edges;
}

Graph from_keys(const std::vector<EdgeKey>& edges, std::size_t n) {
  return build_graph(std::span<const EdgeKey>(edges), n);
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw CallerError("random_tree: n must be >= 1");
  RandomTape tape(seed);
  TapeStream rng(tape, "random_tree");
  return from_keys(prufer_tree_edges(n, rng), n);
}

Graph random_bounded_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  if (n == 0) throw CallerError("random_bounded_tree: n must be >= 1");
  if (max_degree < 2) throw CallerError("random_bounded_tree: max degree must be >= 2");
  RandomTape tape(seed);
  TapeStream rng(tape, "random_bounded_tree");

  std::vector<EdgeKey> edges;
  edges.reserve(n - 1);
  std::vector<std::size_t> degree(n, 0);
  std::vector<VertexId> open{0};  // vertices with spare degree
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t pick = rng.below(open.size());
    const VertexId parent = open[pick];
    edges.push_back({parent, static_cast<VertexId>(i)});
    if (++degree[parent] == max_degree) {
      open[pick] = open.back();
      open.pop_back();
    }
    degree[i] = 1;
    open.push_back(static_cast<VertexId>(i));
  }
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  TapeStream(tape, "random_bounded_labels").shuffle(std::span<VertexId>(label));
  for (auto& e : edges) e = EdgeKey::of(label[e.u], label[e.v]);
  return from_keys(edges, n);
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw CallerError("path: n must be >= 1");
  std::vector<EdgeKey> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(i)});
  return from_keys(edges, n);
}

Graph star_graph(std::size_t leaves) {
  std::vector<EdgeKey> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<VertexId>(i)});
  return from_keys(edges, leaves + 1);
}

Graph kary_tree(std::size_t n, std::size_t d) {
  if (n == 0) throw CallerError("kary: n must be >= 1");
  if (d == 0) throw CallerError("kary: d must be >= 1");
  std::vector<EdgeKey> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<VertexId>((i - 1) / d), static_cast<VertexId>(i)});
  return from_keys(edges, n);
}

Graph complete_dary_tree(std::size_t d, std::size_t depth) {
  if (d == 0) throw CallerError("complete_dary: d must be >= 1");
  std::size_t n = 0;
  std::size_t level = 1;
  for (std::size_t k = 0; k <= depth; ++k) {
    n += level;
    level *= d;
    if (n > (std::size_t{1} << 31)) throw CallerError("complete_dary: tree too large");
  }
  return kary_tree(n, d);
}

Graph caterpillar(std::size_t spine, std::size_t legs) {
  if (spine == 0) throw CallerError("caterpillar: spine must be >= 1");
  std::vector<EdgeKey> edges;
  for (std::size_t i = 1; i < spine; ++i) edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(i)});
  auto next = static_cast<VertexId>(spine);
  for (std::size_t i = 0; i < spine; ++i)
    for (std::size_t j = 0; j < legs; ++j) edges.push_back({static_cast<VertexId>(i), next++});
  return from_keys(edges, next);
}

Graph broom(std::size_t handle, std::size_t bristles) {
  if (handle == 0) throw CallerError("broom: handle must be >= 1");
  std::vector<EdgeKey> edges;
  for (std::size_t i = 1; i < handle; ++i) edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(i)});
  auto next = static_cast<VertexId>(handle);
  for (std::size_t j = 0; j < bristles; ++j) edges.push_back({static_cast<VertexId>(handle - 1), next++});
  return from_keys(edges, next);
}

Graph hub_forest(std::size_t n, std::size_t hubs, std::size_t hub_degree, std::uint64_t seed) {
  if (hubs == 0) throw CallerError("hubs: need at least one hub");
  if (hub_degree < hubs - 1) throw CallerError("hubs: hub degree below hub-star degree");
  const std::size_t core = hubs + hubs * hub_degree - 2 * (hubs - 1);
  if (n < core) throw CallerError("hubs: n=" + std::to_string(n) + " too small, need >= " + std::to_string(core));

  RandomTape tape(seed);
  TapeStream rng(tape, "hub_forest");
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  rng.shuffle(std::span<VertexId>(ids));

  std::vector<EdgeKey> edges;
  edges.reserve(n - 1);
  std::size_t next = hubs;
  std::vector<VertexId> non_hub;
  non_hub.reserve(n - hubs);
  for (std::size_t h = 1; h < hubs; ++h) edges.push_back(EdgeKey::of(ids[0], ids[h]));
  for (std::size_t h = 0; h < hubs; ++h) {
    const std::size_t skeleton = (hubs == 1) ? 0 : (h == 0 ? hubs - 1 : 1);
    for (std::size_t j = skeleton; j < hub_degree; ++j) {
      edges.push_back(EdgeKey::of(ids[h], ids[next]));
      non_hub.push_back(ids[next]);
      ++next;
    }
  }
  for (; next < n; ++next) {
    const VertexId parent = non_hub.empty() ? ids[0] : non_hub[rng.below(non_hub.size())];
    edges.push_back(EdgeKey::of(parent, ids[next]));
    non_hub.push_back(ids[next]);
  }
  return from_keys(edges, n);
}

ForestUnion arboricity_union(std::size_t n, std::size_t alpha, std::uint64_t seed) {
  if (alpha == 0) throw CallerError("arboricity_union: alpha must be >= 1");
  if (n == 0) throw CallerError("arboricity_union: n must be >= 1");
  RandomTape tape(seed);
  ForestUnion out;
  std::vector<EdgeKey> all;
  for (std::size_t k = 0; k < alpha; ++k) {
    TapeStream rng(tape, "arboricity_union", k);
    out.forests.push_back(prufer_tree_edges(n, rng));
    all.insert(all.end(), out.forests.back().begin(), out.forests.back().end());
  }
  out.graph = from_keys(all, n);
  return out;
}

Graph permute_adjacency(const Graph& g, const RandomTape& tape, std::string_view label) {
  std::vector<std::size_t> offsets(g.offsets().begin(), g.offsets().end());
  std::vector<VertexId> adjacency(g.adjacency().begin(), g.adjacency().end());
  const std::string name(label);
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (offsets[v + 1] - offsets[v] < 2) continue;
    TapeStream rng(tape, name, v);
    rng.shuffle(std::span<VertexId>(adjacency.data() + offsets[v], offsets[v + 1] - offsets[v]));
  }
  return Graph::from_csr(std::move(offsets), std::move(adjacency));
}

std::vector<EdgeKey> percolate(const Graph& g, double p_keep, const RandomTape& tape, std::string_view label) {
  if (!(p_keep >= 0.0 && p_keep <= 1.0)) throw CallerError("percolate: p_keep must lie in [0, 1]");
  std::vector<EdgeKey> kept;
  for (const auto& e : g.edges())
    if (tape.coin(label, {e.u, e.v}, p_keep)) kept.push_back(e);
  return kept;
}

// ---------------------------------------------------------------------------

AdversarialParams AdversarialParams::derived(std::uint64_t n, std::uint64_t r, std::uint64_t seed) {
  if (n == 0) throw CallerError("adversarial: n must be >= 1");
  if (r == 0) throw CallerError("adversarial: r must be >= 1");
  AdversarialParams p;
  p.n = n;
  p.r = r;
  p.s = 24 * r;
  p.t = isqrt(n) / (4 * p.s);
  p.seed = seed;
  if (p.t <= 10)
    throw PreconditionError("adversarial: derived t = floor(sqrt(n)/4s) = " + std::to_string(p.t) +
                            " must exceed 10 (s=" + std::to_string(p.s) + ", n=" + std::to_string(n) + ")");
  const std::uint64_t st = p.s * p.t;
  const std::uint64_t total = st * (st + 1) + (p.s * st - 2 * p.s) * (p.t + 1);
  if (total >= n)
    throw PreconditionError("adversarial: instance needs " + std::to_string(total) + " vertices, not below n=" +
                            std::to_string(n));
  return p;
}

AdversarialParams AdversarialParams::explicit_sizes(std::uint64_t s, std::uint64_t t, std::uint64_t seed,
                                                    std::uint64_t r) {
  if (s < 2 || t < 1) throw PreconditionError("adversarial: explicit mode needs s >= 2 and t >= 1");
  if (s * t < s + 1) throw PreconditionError("adversarial: |A| = st must leave room for s red leaves besides a0");
  if (r == 0) throw CallerError("adversarial: r must be >= 1");
  AdversarialParams p;
  p.r = r;
  p.s = s;
  p.t = t;
  p.seed = seed;
  return p;
}

std::vector<EdgeKey> AdversarialLayout::red_edges() const {
  std::vector<EdgeKey> out;
  out.reserve(red_leaves.size());
  for (VertexId a : red_leaves) out.push_back(EdgeKey::of(center, a));
  std::sort(out.begin(), out.end());
  return out;
}

AdversarialLayout sample_adversarial_layout(const AdversarialParams& p) {
  if (p.s < 2 || p.t < 1 || p.s * p.t < p.s + 1) throw PreconditionError("adversarial: invalid (s, t)");
  AdversarialLayout layout;
  layout.s = p.s;
  layout.t = p.t;
  layout.r = p.r;
  layout.target_n = p.n;
  layout.seed = p.seed;
  const std::uint64_t st = p.s * p.t;
  layout.a_count = st;
  layout.b_count = p.s * st - 2 * p.s;
  layout.vertex_count = st * (st + 1) + layout.b_count * (p.t + 1);
  if (layout.vertex_count >= (std::uint64_t{1} << 32)) throw PreconditionError("adversarial: instance exceeds 32-bit ids");

  RandomTape tape(p.seed);
  TapeStream rng(tape, "adversarial");
  layout.center = static_cast<VertexId>(rng.below(st));

  // A' by partial Fisher-Yates over A \ {a0}.
  std::vector<VertexId> others;
  others.reserve(st - 1);
  for (VertexId a = 0; a < st; ++a)
    if (a != layout.center) others.push_back(a);
  for (std::size_t i = 0; i < p.s; ++i) {
    const std::size_t j = i + rng.below(others.size() - i);
    std::swap(others[i], others[j]);
  }
  layout.red_leaves.assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(p.s));
  std::sort(layout.red_leaves.begin(), layout.red_leaves.end());

  // Blue stubs: a needs s - (red degree of a); B is shuffled and dealt out.
  std::vector<std::uint64_t> red_degree(st, 0);
  red_degree[layout.center] = p.s;
  for (VertexId a : layout.red_leaves) red_degree[a] = 1;
  std::vector<VertexId> b_order(layout.b_count);
  std::iota(b_order.begin(), b_order.end(), static_cast<VertexId>(st));
  rng.shuffle(std::span<VertexId>(b_order));
  std::size_t next_b = 0;
  layout.blue_edges.reserve(layout.b_count);
  for (VertexId a = 0; a < st; ++a) {
    for (std::uint64_t k = red_degree[a]; k < p.s; ++k) layout.blue_edges.push_back(EdgeKey::of(a, b_order[next_b++]));
  }
  if (next_b != layout.b_count) throw PreconditionError("adversarial: blue stub count does not match |B|");
  std::sort(layout.blue_edges.begin(), layout.blue_edges.end());
  return layout;
}

AdversarialInstance materialize(const AdversarialLayout& layout) {
  const std::uint64_t st = layout.s * layout.t;
  std::vector<EdgeKey> edges;
  edges.reserve(layout.black_edge_count() + layout.red_leaves.size() + layout.blue_edges.size());
  VertexId leaf = layout.first_a_leaf();
  for (VertexId a = 0; a < layout.a_count; ++a)
    for (std::uint64_t j = 0; j < st; ++j) edges.push_back({a, leaf++});
  for (std::size_t k = 0; k < layout.b_count; ++k) {
    const auto b = static_cast<VertexId>(layout.a_count + k);
    for (std::uint64_t j = 0; j < layout.t; ++j) edges.push_back({b, leaf++});
  }
  const auto red = layout.red_edges();
  edges.insert(edges.end(), red.begin(), red.end());
  edges.insert(edges.end(), layout.blue_edges.begin(), layout.blue_edges.end());

  AdversarialInstance inst;
  inst.layout = layout;
  const Graph sorted = from_keys(edges, layout.vertex_count);
  inst.graph = permute_adjacency(sorted, RandomTape(layout.seed), "adversarial-permute");
  return inst;
}

AdversarialInstance adversarial_instance(const AdversarialParams& p) { return materialize(sample_adversarial_layout(p)); }

}  // namespace lca
