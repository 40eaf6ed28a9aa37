#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "lca/graph.hpp"

namespace lca {

enum class ProbeKind : std::uint8_t { Degree = 0, AdjacencyList = 1, AdjacencyMatrix = 2 };

inline constexpr std::array<ProbeKind, 3> kProbeKinds{ProbeKind::Degree, ProbeKind::AdjacencyList,
                                                      ProbeKind::AdjacencyMatrix};

std::string_view to_string(ProbeKind kind);

struct ProbeStats {
  std::array<std::uint64_t, 3> by_kind{};
  std::uint64_t total = 0;

  std::uint64_t operator[](ProbeKind kind) const { return by_kind[static_cast<std::size_t>(kind)]; }
  friend bool operator==(const ProbeStats&, const ProbeStats&) = default;
};

/// Sees every successful probe: kind, probed vertex, argument (list index or
/// second vertex; 0 for degree probes) and the answer.
using ProbeObserver = std::function<void(ProbeKind, VertexId, std::uint64_t, std::uint64_t)>;

/// Per-query view of a graph through the three LCA probes.
///
/// Every probe costs exactly one unit; nothing is cached on this side.
/// The vertex count is known to the algorithm for free. Range errors throw
/// CallerError without charging; a probe beyond the budget throws
/// BudgetExhausted and leaves the counters at the budget.
class ProbeSession {
 public:
  explicit ProbeSession(const Graph& g, std::optional<std::uint64_t> budget = std::nullopt)
      : graph_(&g), budget_(budget) {}

  ProbeSession(const ProbeSession&) = delete;
  ProbeSession& operator=(const ProbeSession&) = delete;
  ProbeSession(ProbeSession&&) = default;
  ProbeSession& operator=(ProbeSession&&) = default;

  std::size_t vertex_count() const { return graph_->n(); }

  std::size_t degree(VertexId v);
  VertexId neighbor(VertexId v, std::size_t i);
  bool adjacent(VertexId u, VertexId v);

  ProbeStats snapshot() const { return stats_; }
  std::optional<std::uint64_t> budget() const { return budget_; }

  void set_observer(ProbeObserver observer) { observer_ = std::move(observer); }

 private:
  void charge(ProbeKind kind);

  const Graph* graph_;
  ProbeStats stats_;
  std::optional<std::uint64_t> budget_;
  ProbeObserver observer_;
};

}  // namespace lca
