#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "lca/errors.hpp"
#include "lca/generators.hpp"
#include "support/oracles.hpp"

using namespace lca;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> out;
  for (VertexId v = 0; v < g.n(); ++v) out.push_back(g.degree(v));
  return out;
}

void check_layout(const AdversarialLayout& L) {
  const auto s = L.s, t = L.t;
  CHECK(L.a_count == s * t);
  CHECK(L.b_count == s * s * t - 2 * s);
  CHECK(L.vertex_count == (s * t) * (s * t + 1) + (s * s * t - 2 * s) * (t + 1));
  CHECK(L.in_a(L.center));
  REQUIRE(L.red_leaves.size() == s);
  std::set<VertexId> red(L.red_leaves.begin(), L.red_leaves.end());
  CHECK(red.size() == s);
  CHECK(red.count(L.center) == 0);
  for (VertexId a : L.red_leaves) CHECK(L.in_a(a));
  // blue: every b exactly once, every a padded to st + s
  std::vector<std::size_t> blue_deg(L.a_count + L.b_count, 0);
  for (const auto& e : L.blue_edges) {
    CHECK(L.in_a(e.u));
    CHECK(L.in_b(e.v));
    ++blue_deg[e.u];
    ++blue_deg[e.v];
  }
  CHECK(L.blue_edges.size() == L.b_count);
  for (VertexId b = static_cast<VertexId>(L.a_count); b < L.a_count + L.b_count; ++b) CHECK(blue_deg[b] == 1);
  for (VertexId a = 0; a < L.a_count; ++a) {
    const std::size_t red_deg = a == L.center ? s : red.count(a);
    CHECK(blue_deg[a] + red_deg == s);
  }
}

}  // namespace

TEST_CASE("random_tree basics") {
  CHECK(random_tree(1, 5).m() == 0);
  CHECK(random_tree(2, 5).edges() == std::vector<EdgeKey>{{0, 1}});
  CHECK_THROWS_AS(random_tree(0, 5), CallerError);
  for (std::size_t n : {3u, 10u, 257u, 5000u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = random_tree(n, seed);
      CHECK(g.m() == n - 1);
      CHECK(is_forest(g));
    }
  }
  CHECK(random_tree(300, 9).edges() == random_tree(300, 9).edges());
  CHECK(random_tree(300, 9).edges() != random_tree(300, 10).edges());
}

TEST_CASE("random_tree on 3 vertices is uniform over the 3 labeled trees") {
  std::map<std::vector<EdgeKey>, int> counts;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) ++counts[random_tree(3, seed).edges()];
  CHECK(counts.size() == 3);
  for (const auto& [edges, c] : counts) CHECK(std::abs(c - 1000) <= 100);
}

TEST_CASE("random_tree on 4 vertices hits all 16 labeled trees evenly") {
  std::map<std::vector<EdgeKey>, int> counts;
  for (std::uint64_t seed = 0; seed < 16000; ++seed) ++counts[random_tree(4, seed).edges()];
  CHECK(counts.size() == 16);
  double chi2 = 0;
  for (const auto& [edges, c] : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  CHECK(chi2 < 37.7);  // 15 dof, p = 0.001
}

TEST_CASE("random_bounded_tree") {
  const Graph p = random_bounded_tree(50, 2, 1);
  CHECK(p.m() == 49);
  CHECK(p.max_degree() <= 2);
  CHECK(is_forest(p));
  const Graph g = random_bounded_tree(10000, 3, 4);
  CHECK(g.m() == 9999);
  CHECK(g.max_degree() <= 3);
  CHECK(is_forest(g));
  CHECK(degrees(random_bounded_tree(2000, 5, 8)) == degrees(random_bounded_tree(2000, 5, 8)));
  CHECK_THROWS_AS(random_bounded_tree(10, 1, 0), CallerError);
  CHECK(random_bounded_tree(1, 3, 0).m() == 0);
}

TEST_CASE("named families") {
  CHECK(degrees(star_graph(5)) == std::vector<std::size_t>{5, 1, 1, 1, 1, 1});
  CHECK(complete_dary_tree(2, 3).n() == 15);
  CHECK(complete_dary_tree(3, 0).n() == 1);
  CHECK(degrees(path_graph(4)) == std::vector<std::size_t>{1, 2, 2, 1});
  const Graph c = caterpillar(4, 2);
  CHECK(c.n() == 12);
  CHECK(c.m() == 11);
  CHECK(c.max_degree() == 4);
  const Graph b = broom(3, 5);
  CHECK(b.n() == 8);
  CHECK(b.max_degree() == 6);
  const Graph k = kary_tree(100, 15);
  CHECK(k.max_degree() == 16);
  CHECK(k.has_edge(0, 15));
  CHECK(k.has_edge(1, 16));
  for (const Graph& g : {c, b, k, complete_dary_tree(4, 3)}) CHECK(is_forest(g));
  CHECK_THROWS_AS(path_graph(0), CallerError);
  CHECK_THROWS_AS(complete_dary_tree(0, 2), CallerError);
}

TEST_CASE("hub_forest") {
  const Graph g = hub_forest(20000, 10, 500, 3);
  CHECK(is_forest(g));
  CHECK(g.m() == 19999);
  std::size_t hubs = 0;
  for (VertexId v = 0; v < g.n(); ++v) hubs += g.degree(v) >= 500;
  CHECK(hubs == 10);
  CHECK_THROWS_AS(hub_forest(100, 10, 500, 3), CallerError);
}

TEST_CASE("arboricity_union") {
  const ForestUnion one = arboricity_union(200, 1, 5);
  CHECK(is_forest(one.graph));
  CHECK(one.graph.m() == 199);
  const ForestUnion two = arboricity_union(100, 2, 6);
  CHECK(two.graph.m() <= 198);
  REQUIRE(two.forests.size() == 2);
  std::set<EdgeKey> joined;
  for (const auto& f : two.forests) {
    CHECK(is_forest(build_graph(std::span<const EdgeKey>(f), 100)));
    joined.insert(f.begin(), f.end());
  }
  const auto edges = two.graph.edges();
  CHECK(std::vector<EdgeKey>(joined.begin(), joined.end()) == edges);
}

TEST_CASE("permute_adjacency keeps the edge set") {
  const Graph g = random_tree(1000, 2);
  const Graph p = permute_adjacency(g, RandomTape(4));
  CHECK(p.edges() == g.edges());
  bool moved = false;
  for (VertexId v = 0; v < g.n() && !moved; ++v)
    for (std::size_t i = 0; i < g.degree(v); ++i) moved = moved || g.neighbors(v)[i] != p.neighbors(v)[i];
  CHECK(moved);
}

TEST_CASE("percolate") {
  const Graph g = random_tree(100001, 1);
  const RandomTape tape(17);
  CHECK(percolate(g, 0.0, tape).empty());
  CHECK(percolate(g, 1.0, tape).size() == g.m());
  const auto half = percolate(g, 0.5, tape);
  CHECK(std::abs(static_cast<double>(half.size()) - 50000.0) <= 3 * std::sqrt(25000.0));
  CHECK(half == percolate(g, 0.5, tape));
  CHECK(half != percolate(g, 0.5, tape, "other"));
  CHECK_THROWS_AS(percolate(g, 1.5, tape), CallerError);
}

TEST_CASE("adversarial instance with s=4, t=3") {
  const auto inst = adversarial_instance(AdversarialParams::explicit_sizes(4, 3, 1));
  const auto& L = inst.layout;
  CHECK(L.a_count == 12);
  CHECK(L.b_count == 40);
  CHECK(L.vertex_count == 316);
  CHECK(inst.graph.n() == 316);
  check_layout(L);
  for (VertexId a = 0; a < L.a_count; ++a) CHECK(inst.graph.degree(a) == 16);
  for (VertexId b = 12; b < 52; ++b) CHECK(inst.graph.degree(b) == 4);
  CHECK(is_forest(inst.graph));
  CHECK(inst.graph.m() == L.black_edge_count() + 4 + 40);
  for (const auto& e : L.red_edges()) {
    CHECK(inst.graph.has_edge(e.u, e.v));
    CHECK(L.is_colored(e.u, e.v));
  }
}

TEST_CASE("adversarial centers and red leaves are spread out") {
  std::map<VertexId, int> centers;
  for (std::uint64_t seed = 0; seed < 1200; ++seed) ++centers[sample_adversarial_layout(AdversarialParams::explicit_sizes(4, 3, seed)).center];
  CHECK(centers.size() == 12);
  for (const auto& [c, k] : centers) CHECK(std::abs(k - 100) < 40);
}

TEST_CASE("adversarial parameter checks") {
  CHECK_THROWS_AS(AdversarialParams::derived(1000000, 2, 0), PreconditionError);  // t <= 10
  const auto p = AdversarialParams::derived(100000000, 2, 0);
  CHECK(p.s == 48);
  CHECK(p.t == 52);
  const auto layout = sample_adversarial_layout(p);
  CHECK(layout.vertex_count == 12577248);
  CHECK(layout.vertex_count < 100000000);
  check_layout(layout);
  CHECK_THROWS_AS(AdversarialParams::explicit_sizes(1, 3, 0), PreconditionError);
  CHECK_THROWS_AS(AdversarialParams::explicit_sizes(4, 1, 0), PreconditionError);
}
