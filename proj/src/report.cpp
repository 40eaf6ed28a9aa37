#include "lca/report.hpp"

#include <map>
#include <ostream>
#include <set>
#include <string>

#ifndef LCAORIENT_VERSION
#define LCAORIENT_VERSION "dev"
#endif

namespace lca {

using nlohmann::json;

std::string_view version_string() { return LCAORIENT_VERSION; }

json to_json(const OrientParams& p) {
  return {{"n", p.n},
          {"alpha", p.alpha},
          {"r", p.r},
          {"c_sample", p.c_sample},
          {"max_degree", p.max_degree},
          {"labels", p.labels},
          {"lockstep", p.lockstep}};
}

json to_json(const ProbeSummary& s) { return {{"max", s.max}, {"mean", s.mean}, {"p99", s.p99}}; }

json to_json(const RunReport& r) {
  json probes = json::object();
  for (ProbeKind kind : kProbeKinds)
    probes[std::string(to_string(kind))] = to_json(r.probes_by_kind[static_cast<std::size_t>(kind)]);
  probes["total"] = to_json(r.probes_total);
  json out = {{"algorithm", r.algorithm},
              {"params", to_json(r.params)},
              {"seed", r.seed},
              {"graph",
               {{"source", r.graph.source}, {"n", r.graph.n}, {"m", r.graph.m}, {"max_degree", r.graph.max_degree}}},
              {"queries", r.queries},
              {"probes", probes},
              {"verdicts", r.verdicts},
              {"warnings", r.warnings},
              {"passed", r.passed()}};
  if (r.algorithm == "vertex-color") {
    out["colors_used"] = r.colors_used;
  } else {
    out["max_out_degree"] = r.max_out_degree;
    out["out_degree_bound"] = r.out_degree_bound;
    out["out_degree_histogram"] = r.out_degree_histogram;
  }
  return out;
}

json to_json(const ComponentCensus& c) {
  json colors = json::array();
  for (std::size_t i = 0; i < c.sizes_per_color.size(); ++i) {
    std::size_t largest = 0;
    for (auto size : c.sizes_per_color[i]) largest = std::max(largest, size);
    colors.push_back({{"components", c.sizes_per_color[i].size()},
                      {"largest", largest},
                      {"touched", c.touched_per_color[i]}});
  }
  return {{"p", c.p},
          {"max_degree", c.max_degree},
          {"epsilon", c.epsilon},
          {"max_component", c.max_component},
          {"bound", c.bound},
          {"within_bound", c.within_bound},
          {"colors", colors}};
}

json to_json(const AttackReport& a) {
  return {{"strategy", a.strategy},
          {"red_edges", a.red_edges},
          {"center_out_degree", a.center_out_degree},
          {"fallbacks", a.fallbacks},
          {"max_probes", a.max_probes},
          {"total_probes", a.total_probes},
          {"queries_seeing_colored", a.queries_seeing_colored},
          {"colored_edge_probed", a.colored_edge_probed},
          {"budget", a.budget ? json(*a.budget) : json(nullptr)}};
}

json to_json(const AdversarialLayout& layout) {
  return {{"s", layout.s},
          {"t", layout.t},
          {"r", layout.r},
          {"target_n", layout.target_n},
          {"a_count", layout.a_count},
          {"b_count", layout.b_count},
          {"vertex_count", layout.vertex_count},
          {"edge_count", layout.black_edge_count() + layout.red_leaves.size() + layout.blue_edges.size()},
          {"center", layout.center}};
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::map<std::string, std::string>& row) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) flatten(child, prefix.empty() ? key : prefix + "." + key, row);
  } else if (v.is_array()) {
    std::string joined;
    bool scalar = true;
    for (const auto& item : v) {
      if (item.is_structured()) {
        scalar = false;
        break;
      }
      joined += (joined.empty() ? "" : ";") + scalar_text(item);
    }
    if (scalar) {
      row[prefix] = joined;
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), row);
    }
  } else {
    row[prefix] = scalar_text(v);
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const json& report) {
  std::vector<std::map<std::string, std::string>> rows;
  std::set<std::string> columns;
  if (report.contains("trials")) {
    for (const auto& trial : report["trials"]) {
      auto& row = rows.emplace_back();
      flatten(trial, "", row);
      for (const auto& [key, value] : row) columns.insert(key);
    }
  }
  bool first = true;
  for (const auto& c : columns) {
    out << (first ? "" : ",") << csv_cell(c);
    first = false;
  }
  out << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& c : columns) {
      const auto it = row.find(c);
      out << (first ? "" : ",") << (it == row.end() ? "" : csv_cell(it->second));
      first = false;
    }
    out << "\n";
  }
}

}  // namespace lca
