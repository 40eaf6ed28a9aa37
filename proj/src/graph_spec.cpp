#include "lca/graph_spec.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "lca/errors.hpp"

namespace lca {
namespace {

struct Family {
  const char* name;
  std::vector<std::string> keys;
  const char* help;
};

const std::vector<Family>& families() {
  static const std::vector<Family> table = {
      {"random_tree", {"n"}, "uniform labeled tree (Pruefer)"},
      {"random_bounded", {"n", "delta"}, "random attachment tree, max degree delta"},
      {"arboricity", {"n", "alpha"}, "union of alpha random spanning trees"},
      {"path", {"n"}, "path on n vertices"},
      {"star", {"leaves"}, "star with center 0"},
      {"complete_dary", {"d", "depth"}, "complete d-ary tree"},
      {"kary", {"n", "d"}, "heap-shaped d-ary tree on n vertices"},
      {"caterpillar", {"spine", "legs"}, "path of spine vertices, legs leaves each"},
      {"broom", {"handle", "bristles"}, "path of handle vertices ending in a star"},
      {"hubs", {"n", "hubs", "deg"}, "tree with hubs of degree deg, rest random"},
      {"adv", {"r", "n"}, "lower-bound instance, derived sizes (or s,t[,r] explicit)"},
  };
  return table;
}

const Family& family(const std::string& name) {
  for (const auto& f : families())
    if (name == f.name) return f;
  throw CallerError("unknown graph family '" + name + "'");
}

void check_keys(const GraphSpec& spec, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : spec.args)
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw CallerError("graph spec '" + spec.text + "': unknown key '" + key + "'");
  for (const auto& key : allowed)
    if (!spec.has(key)) throw CallerError("graph spec '" + spec.text + "': missing key '" + key + "'");
}

AdversarialParams adversarial_params(const GraphSpec& spec, std::uint64_t seed) {
  if (spec.has("s") || spec.has("t")) {
    for (const auto& [key, value] : spec.args)
      if (key != "s" && key != "t" && key != "r")
        throw CallerError("graph spec '" + spec.text + "': unknown key '" + key + "'");
    return AdversarialParams::explicit_sizes(spec.get("s"), spec.get("t"), seed, spec.has("r") ? spec.get("r") : 1);
  }
  check_keys(spec, {"r", "n"});
  return AdversarialParams::derived(spec.get("n"), spec.get("r"), seed);
}

}  // namespace

GraphSpec GraphSpec::parse(std::string_view text) {
  GraphSpec spec;
  spec.text = std::string(text);
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw CallerError("graph spec '" + spec.text + "': missing family name");
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw CallerError("graph spec '" + spec.text + "': expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string_view value = item.substr(eq + 1);
    std::uint64_t number = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
    if (ec != std::errc{} || end != value.data() + value.size() || value.empty())
      throw CallerError("graph spec '" + spec.text + "': '" + key + "' needs a non-negative integer");
    if (!spec.args.emplace(key, number).second)
      throw CallerError("graph spec '" + spec.text + "': duplicate key '" + key + "'");
  }
  return spec;
}

std::uint64_t GraphSpec::get(const std::string& key) const {
  const auto it = args.find(key);
  if (it == args.end()) throw CallerError("graph spec '" + text + "': missing key '" + key + "'");
  return it->second;
}

BuiltGraph build_from_spec(const GraphSpec& spec, std::uint64_t seed) {
  const Family& f = family(spec.name);
  BuiltGraph out;
  if (spec.name == "adv") {
    AdversarialInstance inst = adversarial_instance(adversarial_params(spec, seed));
    out.graph = std::move(inst.graph);
    out.layout = std::move(inst.layout);
    out.declared_max_degree = out.graph.max_degree();
    return out;
  }
  check_keys(spec, f.keys);
  const auto& name = spec.name;
  if (name == "random_tree") {
    out.graph = random_tree(spec.get("n"), seed);
  } else if (name == "random_bounded") {
    out.graph = random_bounded_tree(spec.get("n"), spec.get("delta"), seed);
    out.declared_max_degree = spec.get("delta");
  } else if (name == "arboricity") {
    out.graph = arboricity_union(spec.get("n"), spec.get("alpha"), seed).graph;
    out.declared_alpha = spec.get("alpha");
  } else if (name == "path") {
    out.graph = path_graph(spec.get("n"));
  } else if (name == "star") {
    out.graph = star_graph(spec.get("leaves"));
  } else if (name == "complete_dary") {
    out.graph = complete_dary_tree(spec.get("d"), spec.get("depth"));
  } else if (name == "kary") {
    out.graph = kary_tree(spec.get("n"), spec.get("d"));
  } else if (name == "caterpillar") {
    out.graph = caterpillar(spec.get("spine"), spec.get("legs"));
  } else if (name == "broom") {
    out.graph = broom(spec.get("handle"), spec.get("bristles"));
  } else if (name == "hubs") {
    out.graph = hub_forest(spec.get("n"), spec.get("hubs"), spec.get("deg"), seed);
  }
  if (out.declared_max_degree == 0) out.declared_max_degree = out.graph.max_degree();
  return out;
}

AdversarialLayout adversarial_layout_from_spec(const GraphSpec& spec, std::uint64_t seed) {
  if (spec.name != "adv") throw CallerError("graph spec '" + spec.text + "' is not an adv: instance");
  return sample_adversarial_layout(adversarial_params(spec, seed));
}

std::string graph_spec_help() {
  std::string out = "graph specs (name:key=value,...):\n";
  for (const auto& f : families()) {
    std::string keys;
    for (const auto& k : f.keys) keys += (keys.empty() ? "" : ",") + k;
    out += "  " + std::string(f.name) + ":" + keys + "  " + f.help + "\n";
  }
  return out;
}

}  // namespace lca
