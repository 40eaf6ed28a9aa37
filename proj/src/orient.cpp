#include "lca/orient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "lca/errors.hpp"

namespace lca {

std::string_view to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::HighDegree: return "high-degree";
    case Algorithm::Medium: return "medium";
    case Algorithm::ColorForest: return "color-forest";
    case Algorithm::BoundedForest: return "bounded-forest";
    case Algorithm::VertexColor: return "vertex-color";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto alg : {Algorithm::HighDegree, Algorithm::Medium, Algorithm::ColorForest, Algorithm::BoundedForest,
                   Algorithm::VertexColor}) {
    if (to_string(alg) == name) return alg;
  }
  return std::nullopt;
}

void OrientParams::validate() const {
  if (r < 1) throw CallerError("r must be >= 1");
  if (alpha < 1) throw CallerError("alpha must be >= 1");
  if (!(c_sample >= 1.0)) throw CallerError("c_sample must be >= 1");
  if (labels < 1) throw CallerError("labels must be >= 1");
}

VertexClass classify_for_medium(std::uint64_t degree, std::uint64_t n, const OrientParams& p) {
  if (degree <= p.r) return VertexClass::Small;
  // deg >= alpha n / (r/10)  <=>  deg * r >= 10 alpha n
  const auto lhs = static_cast<unsigned __int128>(degree) * p.r;
  const auto rhs = static_cast<unsigned __int128>(10) * p.alpha * n;
  return lhs >= rhs ? VertexClass::Large : VertexClass::Medium;
}

bool is_large_for_color_forest(std::uint64_t degree, std::uint64_t n, const OrientParams& p) {
  return static_cast<unsigned __int128>(degree) * p.r >= static_cast<unsigned __int128>(5) * n;
}

std::uint64_t medium_sample_count(std::uint64_t degree, std::uint64_t n, const OrientParams& p) {
  const double ln_n = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
  const double s = static_cast<double>(p.r) / 10.0;
  const double k = std::ceil(p.c_sample * static_cast<double>(degree) * ln_n / s);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

std::uint32_t color_forest_palette(const OrientParams& p) {
  return static_cast<std::uint32_t>(std::max<std::uint64_t>(1, p.r / 5));
}

bool medium_guarantee_applies(std::uint64_t n, const OrientParams& p) {
  const double a = static_cast<double>(p.alpha);
  return static_cast<double>(p.r) >= 10.0 * std::cbrt(a * a * static_cast<double>(n));
}

namespace {

constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

std::uint64_t assumed_n(const ProbeSession& session, const OrientParams& p) {
  return p.n != 0 ? p.n : session.vertex_count();
}

// Per-thread visit stamps; resetting is O(1) per query.
class VisitMarks {
 public:
  void begin(std::size_t n) {
    if (stamp_.size() < n) stamp_.resize(n, 0);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  bool test(VertexId v) const { return stamp_[v] == epoch_; }
  void set(VertexId v) { stamp_[v] = epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

struct Frame {
  VertexId vertex;
  VertexId parent;
  std::size_t degree;
  std::size_t next;
  bool odd;
};

struct SideMinimum {
  VertexId id;
  bool odd;  // depth parity of id relative to the start
};

thread_local VisitMarks t_marks;
thread_local std::vector<Frame> t_stacks[2];

// DFS over the tree hanging off `start` (never stepping back to `parent`),
// scanning adjacency lists in ascending index order, one probe per step.
// `accept(x, w)` returns w's degree when the edge {x, w} belongs to the
// searched subgraph, nullopt otherwise. A second route to a marked vertex
// means a cycle.
template <class Accept>
class Explorer {
 public:
  Explorer(ProbeSession& session, std::vector<Frame>& stack, VertexId start, VertexId parent,
           std::size_t start_degree, Accept& accept)
      : session_(session), stack_(stack), accept_(accept), best_{start, false} {
    stack_.clear();
    stack_.push_back({start, parent, start_degree, 0, false});
  }

  bool done() const { return stack_.empty(); }
  const SideMinimum& best() const { return best_; }

  void step() {
    Frame& top = stack_.back();
    if (top.next == top.degree) {
      stack_.pop_back();
      return;
    }
    const VertexId x = top.vertex;
    const bool child_odd = !top.odd;
    const VertexId w = session_.neighbor(x, top.next++);
    if (w == top.parent) return;
    const std::optional<std::size_t> w_degree = accept_(x, w);
    if (!w_degree) return;
    if (t_marks.test(w))
      throw NotAForest("cycle through vertices " + std::to_string(x) + " and " + std::to_string(w));
    t_marks.set(w);
    if (w < best_.id) best_ = {w, child_odd};
    stack_.push_back({w, x, *w_degree, 0, child_odd});
  }

 private:
  ProbeSession& session_;
  std::vector<Frame>& stack_;
  Accept& accept_;
  SideMinimum best_;
};

template <class Accept>
SideMinimum explore(ProbeSession& session, VertexId start, VertexId parent, std::size_t start_degree,
                    Accept&& accept) {
  Explorer<std::remove_reference_t<Accept>> ex(session, t_stacks[0], start, parent, start_degree, accept);
  while (!ex.done()) ex.step();
  return ex.best();
}

// Same answer as exploring both sides fully: alternate single steps and stop
// once one side is finished and the other has gone below its minimum, or
// either side has reached id 0.
template <class Accept>
bool lockstep_u_side_smaller(ProbeSession& session, EdgeKey e, std::size_t du, std::size_t dv, Accept&& accept) {
  using Ex = Explorer<std::remove_reference_t<Accept>>;
  Ex a(session, t_stacks[0], e.u, e.v, du, accept);
  Ex b(session, t_stacks[1], e.v, e.u, dv, accept);
  while (true) {
    if (a.best().id == 0) return true;
    if (b.best().id == 0) return false;
    if (a.done() && (b.done() || b.best().id < a.best().id)) return a.best().id < b.best().id;
    if (b.done() && a.best().id < b.best().id) return true;
    if (!a.done()) a.step();
    if (!b.done()) b.step();
  }
}

DirectedEdge toward(EdgeKey e, VertexId head) { return head == e.u ? DirectedEdge{e.v, e.u} : DirectedEdge{e.u, e.v}; }

}  // namespace

DirectedEdge orient_high_degree(ProbeSession& session, EdgeKey e) {
  const std::size_t du = session.degree(e.u);
  const std::size_t dv = session.degree(e.v);
  if (du > dv) return {e.u, e.v};
  if (dv > du) return {e.v, e.u};
  return {e.v, e.u};  // tie: higher id to lower id
}

DirectedEdge orient_medium(ProbeSession& session, const RandomTape& tape, EdgeKey e, const OrientParams& p) {
  const std::uint64_t n = assumed_n(session, p);
  const std::uint64_t du = session.degree(e.u);
  const std::uint64_t dv = session.degree(e.v);
  const VertexClass cu = classify_for_medium(du, n, p);
  const VertexClass cv = classify_for_medium(dv, n, p);

  // Case 1: away from a Small endpoint, u first.
  if (cu == VertexClass::Small) return {e.u, e.v};
  if (cv == VertexClass::Small) return {e.v, e.u};
  // Case 2: toward a Large endpoint, u first.
  if (cu == VertexClass::Large) return {e.v, e.u};
  if (cv == VertexClass::Large) return {e.u, e.v};

  // Case 3: both Medium. Estimate the Medium fraction among u's neighbors.
  const std::uint64_t k = medium_sample_count(du, n, p);
  std::uint64_t medium = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    const VertexId w = session.neighbor(e.u, tape.sample_index(e, j, du));
    if (classify_for_medium(session.degree(w), n, p) == VertexClass::Medium) ++medium;
  }
  // medium / k <= 2s/d = r / (5d)
  const bool sparse = static_cast<unsigned __int128>(5) * du * medium <= static_cast<unsigned __int128>(p.r) * k;
  return sparse ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u};
}

DirectedEdge orient_color_forest(ProbeSession& session, const RandomTape& tape, EdgeKey e, const OrientParams& p) {
  const std::uint64_t n = assumed_n(session, p);
  const std::size_t du = session.degree(e.u);
  const std::size_t dv = session.degree(e.v);
  const bool large_u = is_large_for_color_forest(du, n, p);
  const bool large_v = is_large_for_color_forest(dv, n, p);
  if (large_u) return toward(e, e.u);
  if (large_v) return toward(e, e.v);

  const std::uint32_t palette = color_forest_palette(p);
  const std::uint32_t color = tape.edge_color(e, palette);
  auto accept = [&](VertexId x, VertexId w) -> std::optional<std::size_t> {
    if (tape.edge_color(EdgeKey::of(x, w), palette) != color) return std::nullopt;
    const std::size_t dw = session.degree(w);
    if (is_large_for_color_forest(dw, n, p)) return std::nullopt;  // never entered
    return dw;
  };
  t_marks.begin(session.vertex_count());
  t_marks.set(e.u);
  t_marks.set(e.v);
  const SideMinimum side_u = explore(session, e.u, e.v, du, accept);
  const SideMinimum side_v = explore(session, e.v, e.u, dv, accept);
  return toward(e, side_u.id < side_v.id ? e.u : e.v);
}

DirectedEdge orient_bounded_forest(ProbeSession& session, const RandomTape& tape, EdgeKey e, const OrientParams& p) {
  if (p.max_degree != 0 && p.r >= p.max_degree) return {e.v, e.u};  // any orientation has out-degree <= r

  const auto palette = static_cast<std::uint32_t>(std::min<std::uint64_t>(p.r, std::numeric_limits<std::uint32_t>::max()));
  const std::uint32_t color = tape.edge_color(e, palette);
  auto accept = [&](VertexId x, VertexId w) -> std::optional<std::size_t> {
    if (tape.edge_color(EdgeKey::of(x, w), palette) != color) return std::nullopt;
    return session.degree(w);
  };
  t_marks.begin(session.vertex_count());
  t_marks.set(e.u);
  t_marks.set(e.v);
  const std::size_t du = session.degree(e.u);
  if (p.lockstep) {
    const std::size_t dv = session.degree(e.v);
    return toward(e, lockstep_u_side_smaller(session, e, du, dv, accept) ? e.u : e.v);
  }
  const SideMinimum side_u = explore(session, e.u, e.v, du, accept);
  const std::size_t dv = session.degree(e.v);
  const SideMinimum side_v = explore(session, e.v, e.u, dv, accept);
  return toward(e, side_u.id < side_v.id ? e.u : e.v);
}

VertexColor color_forest(ProbeSession& session, const RandomTape& tape, VertexId v, const OrientParams& p) {
  if (p.labels < 1) throw CallerError("color_forest: labels must be >= 1");
  if (v >= session.vertex_count()) throw CallerError("color_forest: vertex outside [0, n)");
  VertexColor color(p.labels, 1);
  const std::size_t dv = session.degree(v);
  for (std::uint32_t label = 0; label < p.labels; ++label) {
    auto accept = [&](VertexId x, VertexId w) -> std::optional<std::size_t> {
      if (tape.edge_color(EdgeKey::of(x, w), p.labels, kVertexColorLabel) != label) return std::nullopt;
      return session.degree(w);
    };
    t_marks.begin(session.vertex_count());
    t_marks.set(v);
    const SideMinimum min = explore(session, v, kNoParent, dv, accept);
    color[label] = min.odd ? 2 : 1;
  }
  return color;
}

DirectedEdge orient_edge(Algorithm alg, ProbeSession& session, const RandomTape& tape, EdgeKey e,
                         const OrientParams& p) {
  switch (alg) {
    case Algorithm::HighDegree: return orient_high_degree(session, e);
    case Algorithm::Medium: return orient_medium(session, tape, e, p);
    case Algorithm::ColorForest: return orient_color_forest(session, tape, e, p);
    case Algorithm::BoundedForest: return orient_bounded_forest(session, tape, e, p);
    case Algorithm::VertexColor: break;
  }
  throw CallerError("vertex-color is a vertex query, not an edge orientation");
}

}  // namespace lca
