#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lca/graph.hpp"

namespace lca {

struct LoadedGraph {
  Graph graph;
  /// Original token for each dense id; empty when the file already used ids 0..n-1.
  std::vector<std::string> labels;
  bool relabeled() const { return !labels.empty(); }
};

/// Reads the "n m" header followed by m "u v" lines; '#' lines are comments.
/// Tokens that are not all decimal ids below n are remapped in order of first
/// appearance.
LoadedGraph read_edge_list(std::istream& in);
LoadedGraph read_edge_list_file(const std::string& path);

/// Writes canonical edges sorted by (u, v).
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lca
