#pragma once

// Slow, independent reimplementations used only to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "lca/graph.hpp"

namespace oracle {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Recursive DFS with back-edge detection on an adjacency matrix.
inline bool has_cycle(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (auto [a, b] : edges) {
    if (a == b || adj[a][b]) return true;
    adj[a][b] = adj[b][a] = 1;
  }
  std::vector<int> seen(n, 0);
  std::function<bool(std::size_t, std::size_t)> visit = [&](std::size_t v, std::size_t parent) {
    seen[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      if (!adj[v][w] || w == parent) continue;
      if (seen[w] || visit(w, v)) return true;
    }
    return false;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v] && visit(v, n)) return true;
  return false;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }
  std::size_t size(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Sorted sizes of the components that contain at least one of `edges`.
inline std::vector<std::size_t> component_sizes(std::size_t n, const std::vector<lca::EdgeKey>& edges) {
  UnionFind uf(n);
  std::vector<char> touched(n, 0);
  for (const auto& e : edges) {
    uf.unite(e.u, e.v);
    touched[e.u] = touched[e.v] = 1;
  }
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < n; ++v)
    if (touched[v] && uf.find(v) == v) sizes.push_back(uf.size(v));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Pruefer decoding by repeated smallest-leaf search, O(n^2).
inline std::vector<Edge> decode_pruefer(const std::vector<std::uint32_t>& code, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::vector<Edge> edges;
  for (auto c : code) {
    std::uint32_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::uint32_t a = 0;
  while (degree[a] != 1) ++a;
  std::uint32_t b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return edges;
}

// Every labeled tree on n vertices (n^(n-2) of them).
inline void for_each_tree(std::size_t n, const std::function<void(const std::vector<Edge>&)>& fn) {
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::vector<std::uint32_t> code(n - 2, 0);
  while (true) {
    fn(decode_pruefer(code, n));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) return;
  }
}

// Every labeled forest on n vertices, by include/exclude over the pairs of
// K_n with union-find pruning.
inline void for_each_forest(std::size_t n, const std::function<void(const std::vector<Edge>&)>& fn) {
  std::vector<Edge> pairs;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> chosen;
  std::function<void(std::size_t, std::vector<std::uint32_t>)> rec = [&](std::size_t i, std::vector<std::uint32_t> comp) {
    if (i == pairs.size()) {
      fn(chosen);
      return;
    }
    rec(i + 1, comp);
    auto [a, b] = pairs[i];
    if (comp[a] == comp[b]) return;
    const auto from = comp[b], to = comp[a];
    for (auto& c : comp)
      if (c == from) c = to;
    chosen.push_back(pairs[i]);
    rec(i + 1, comp);
    chosen.pop_back();
  };
  std::vector<std::uint32_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0u);
  rec(0, comp);
}

// Minimum achievable max out-degree via the density characterization:
// max over vertex subsets H of ceil(|E(H)| / |H|).
inline std::size_t densest_ceiling(std::size_t n, const std::vector<Edge>& edges) {
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    std::size_t m = 0;
    for (auto [a, b] : edges)
      if ((mask >> a & 1) && (mask >> b & 1)) ++m;
    best = std::max(best, (m + k - 1) / k);
  }
  return best;
}

inline lca::Graph to_graph(std::size_t n, const std::vector<Edge>& edges) {
  return lca::build_graph(std::span<const Edge>(edges), n);
}

}  // namespace oracle
