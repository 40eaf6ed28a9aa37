#include "lca/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "lca/errors.hpp"

namespace lca {
namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

std::optional<std::uint64_t> parse_decimal(const std::string& tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw CallerError("edge list: missing \"n m\" header");
  std::uint64_t n = 0, m = 0;
  {
    std::istringstream header(line);
    std::string a, b, extra;
    header >> a >> b;
    auto pn = parse_decimal(a);
    auto pm = parse_decimal(b);
    if (!pn || !pm || (header >> extra)) throw CallerError("edge list: malformed header on line " + std::to_string(lineno));
    n = *pn;
    m = *pm;
  }

  std::vector<std::pair<std::string, std::string>> raw;
  raw.reserve(m);
  while (raw.size() < m && next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    std::string a, b, extra;
    if (!(row >> a >> b) || (row >> extra))
      throw CallerError("edge list: expected \"u v\" on line " + std::to_string(lineno));
    raw.emplace_back(std::move(a), std::move(b));
  }
  if (raw.size() != m)
    throw CallerError("edge list: header declares " + std::to_string(m) + " edges, found " + std::to_string(raw.size()));
  if (next_content_line(in, line, lineno)) throw CallerError("edge list: trailing data on line " + std::to_string(lineno));

  bool dense = true;
  for (const auto& [a, b] : raw) {
    auto pa = parse_decimal(a);
    auto pb = parse_decimal(b);
    if (!pa || !pb || *pa >= n || *pb >= n) {
      dense = false;
      break;
    }
  }

  LoadedGraph loaded;
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  if (dense) {
    for (const auto& [a, b] : raw)
      edges.emplace_back(static_cast<VertexId>(*parse_decimal(a)), static_cast<VertexId>(*parse_decimal(b)));
  } else {
    std::unordered_map<std::string, VertexId> ids;
    auto intern = [&](const std::string& tok) {
      auto [it, inserted] = ids.try_emplace(tok, static_cast<VertexId>(loaded.labels.size()));
      if (inserted) {
        if (loaded.labels.size() >= n)
          throw CallerError("edge list: more than n=" + std::to_string(n) + " distinct vertex labels");
        loaded.labels.push_back(tok);
      }
      return it->second;
    };
    for (const auto& [a, b] : raw) {
      VertexId ia = intern(a);
      VertexId ib = intern(b);
      edges.emplace_back(ia, ib);
    }
    // Labels for ids never mentioned in an edge.
    while (loaded.labels.size() < n) loaded.labels.push_back("#" + std::to_string(loaded.labels.size()));
  }
  loaded.graph = build_graph(std::span<const std::pair<VertexId, VertexId>>(edges), n);
  return loaded;
}

LoadedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CallerError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace lca
