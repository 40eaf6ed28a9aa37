#include "lca/probe_oracle.hpp"

#include <string>

#include "lca/errors.hpp"

namespace lca {

std::string_view to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::Degree: return "degree";
    case ProbeKind::AdjacencyList: return "adjacency_list";
    case ProbeKind::AdjacencyMatrix: return "adjacency_matrix";
  }
  return "unknown";
}

void ProbeSession::charge(ProbeKind kind) {
  if (budget_ && stats_.total >= *budget_)
    throw BudgetExhausted("probe budget of " + std::to_string(*budget_) + " exhausted");
  ++stats_.by_kind[static_cast<std::size_t>(kind)];
  ++stats_.total;
}

std::size_t ProbeSession::degree(VertexId v) {
  if (!graph_->contains(v)) throw CallerError("degree probe on vertex " + std::to_string(v) + " outside [0, n)");
  charge(ProbeKind::Degree);
  const std::size_t d = graph_->degree(v);
  if (observer_) observer_(ProbeKind::Degree, v, 0, d);
  return d;
}

VertexId ProbeSession::neighbor(VertexId v, std::size_t i) {
  if (!graph_->contains(v)) throw CallerError("neighbor probe on vertex " + std::to_string(v) + " outside [0, n)");
  if (i >= graph_->degree(v))
    throw CallerError("neighbor index " + std::to_string(i) + " out of range for vertex " + std::to_string(v));
  charge(ProbeKind::AdjacencyList);
  const VertexId w = graph_->neighbors(v)[i];
  if (observer_) observer_(ProbeKind::AdjacencyList, v, i, w);
  return w;
}

bool ProbeSession::adjacent(VertexId u, VertexId v) {
  if (!graph_->contains(u) || !graph_->contains(v))
    throw CallerError("adjacency probe outside [0, n)");
  charge(ProbeKind::AdjacencyMatrix);
  const bool hit = graph_->has_edge(u, v);
  if (observer_) observer_(ProbeKind::AdjacencyMatrix, u, v, hit ? 1 : 0);
  return hit;
}

}  // namespace lca
