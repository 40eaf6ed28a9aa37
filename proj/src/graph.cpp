#include "lca/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lca/errors.hpp"

namespace lca {

EdgeKey EdgeKey::of(VertexId a, VertexId b) {
  if (a == b) throw CallerError("self-loop pair {" + std::to_string(a) + "," + std::to_string(a) + "}");
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

Graph Graph::from_csr(std::vector<std::size_t> offsets, std::vector<VertexId> neighbors) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != neighbors.size())
    throw CallerError("malformed CSR offsets");
  const std::size_t n = offsets.size() - 1;
  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(neighbors);
  if (g.adjacency_.size() % 2 != 0) throw CallerError("odd half-edge count");
  g.m_ = g.adjacency_.size() / 2;

  for (std::size_t v = 0; v < n; ++v) {
    if (g.offsets_[v + 1] < g.offsets_[v]) throw CallerError("decreasing CSR offsets");
    auto nbrs = g.neighbors(static_cast<VertexId>(v));
    g.max_degree_ = std::max(g.max_degree_, nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= n) throw CallerError("neighbor id out of range at vertex " + std::to_string(v));
      if (nbrs[i] == v) throw CallerError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nbrs[i] <= nbrs[i - 1]) g.sorted_lists_ = false;
    }
  }
  // Duplicate and symmetry checks on a sorted copy of each list.
  std::vector<VertexId> scratch;
  for (std::size_t v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(static_cast<VertexId>(v));
    scratch.assign(nbrs.begin(), nbrs.end());
    std::sort(scratch.begin(), scratch.end());
    if (std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end())
      throw CallerError("duplicate neighbor at vertex " + std::to_string(v));
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
      if (!g.has_edge(w, static_cast<VertexId>(v)))
        throw CallerError("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(w));
    }
  }
  return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a >= n() || b >= n() || a == b) return false;
  if (degree(b) < degree(a)) std::swap(a, b);
  auto nbrs = neighbors(a);
  if (sorted_lists_) return std::binary_search(nbrs.begin(), nbrs.end(), b);
  return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

std::vector<EdgeKey> Graph::edges() const {
  std::vector<EdgeKey> out;
  out.reserve(m_);
  std::vector<VertexId> higher;
  for (std::size_t v = 0; v < n(); ++v) {
    higher.clear();
    for (VertexId w : neighbors(static_cast<VertexId>(v)))
      if (w > v) higher.push_back(w);
    std::sort(higher.begin(), higher.end());
    for (VertexId w : higher) out.push_back({static_cast<VertexId>(v), w});
  }
  return out;
}

Graph build_graph(std::span<const EdgeKey> edges, std::size_t n) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw CallerError("edge endpoint out of range: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} with n=" + std::to_string(n));
    if (e.u == e.v) throw CallerError("self-loop at vertex " + std::to_string(e.u));
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<VertexId> adj(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    adj[cursor[e.u]++] = e.v;
    adj[cursor[e.v]++] = e.u;
  }
  // Sort and deduplicate each list in place, compacting as we go.
  std::size_t write = 0;
  std::size_t begin = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t end = offsets[v + 1];
    std::sort(adj.begin() + static_cast<std::ptrdiff_t>(begin), adj.begin() + static_cast<std::ptrdiff_t>(end));
    const std::size_t start = write;
    for (std::size_t i = begin; i < end; ++i) {
      if (write > start && adj[write - 1] == adj[i]) continue;
      adj[write++] = adj[i];
    }
    begin = end;
    offsets[v + 1] = write;
  }
  adj.resize(write);

  Graph g = Graph::from_csr(std::move(offsets), std::move(adj));
  return g;
}

Graph build_graph(std::span<const std::pair<VertexId, VertexId>> edges, std::size_t n) {
  std::vector<EdgeKey> keys;
  keys.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n)
      throw CallerError("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) +
                        ") with n=" + std::to_string(n));
    keys.push_back(EdgeKey::of(a, b));
  }
  return build_graph(std::span<const EdgeKey>(keys), n);
}

namespace {

struct DisjointSets {
  std::vector<VertexId> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), VertexId{0}); }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_forest(const Graph& g) {
  DisjointSets sets(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
      if (w > v && !sets.unite(static_cast<VertexId>(v), w)) return false;
    }
  }
  return true;
}

Orientation::Orientation(std::vector<DirectedEdge> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end(), [](const DirectedEdge& a, const DirectedEdge& b) { return a.key() < b.key(); });
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (arcs_[i - 1].key() == arcs_[i].key())
      throw CallerError("orientation assigns pair {" + std::to_string(arcs_[i].key().u) + "," +
                        std::to_string(arcs_[i].key().v) + "} twice");
  }
}

std::optional<DirectedEdge> Orientation::find(EdgeKey key) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key,
                             [](const DirectedEdge& a, const EdgeKey& k) { return a.key() < k; });
  if (it == arcs_.end() || it->key() != key) return std::nullopt;
  return *it;
}

bool Orientation::covers(const Graph& g) const {
  if (arcs_.size() != g.m()) return false;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (arcs_[i].key() != edges[i]) return false;
  return true;
}

OutDegreeProfile max_out_degree(const Orientation& o, std::size_t n) {
  std::vector<std::size_t> out(n, 0);
  for (const auto& arc : o.arcs()) {
    if (arc.from >= n) throw CallerError("arc tail outside vertex range");
    ++out[arc.from];
  }
  OutDegreeProfile profile;
  for (std::size_t d : out) profile.max = std::max(profile.max, d);
  profile.histogram.assign(profile.max + 1, 0);
  for (std::size_t d : out) ++profile.histogram[d];
  if (n == 0) profile.histogram = {0};
  return profile;
}

}  // namespace lca
