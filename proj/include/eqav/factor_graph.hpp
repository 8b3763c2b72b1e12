#pragma once

// The factor graph of a consecutive avoidance set: vertices are the members
// of length b (the longest basis element), with an edge u -> v whenever the
// last b-1 points of u and the first b-1 points of v form the same relation.
// Longer members correspond to walks through their length-b windows.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqav/avoidance.hpp"
#include "eqav/digraph.hpp"
#include "eqav/relation.hpp"

namespace eqav {

struct VertexFlags {
  bool special = false;    // last point is a singleton class
  bool ambiguous = false;  // special, and some in-neighbour can be reached with an inactive class
  int classes = 0;
};

/// A walk in a factor graph, as vertex indices. Length is count - 1.
struct Path {
  std::vector<int> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Is `small` a contiguous piece of `big`?
inline bool is_subpath(const Path& small, const Path& big) {
  if (small.vertices.size() > big.vertices.size()) return false;
  return std::search(big.vertices.begin(), big.vertices.end(), small.vertices.begin(),
                     small.vertices.end()) != big.vertices.end();
}

class BranchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FactorGraph {
 public:
  const Basis& basis() const noexcept { return basis_; }
  std::size_t window() const noexcept { return b_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<EqRel>& vertices() const noexcept { return vertices_; }
  const EqRel& vertex(int v) const { return vertices_[v]; }
  const Digraph& graph() const noexcept { return graph_; }
  const VertexFlags& flags(int v) const { return flags_[v]; }

  std::optional<int> index_of(const EqRel& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index(const EqRel& r) const {
    auto i = index_of(r);
    if (!i) throw std::out_of_range(r.format() + " is not a vertex");
    return *i;
  }

  bool is_path(const Path& p) const {
    if (p.vertices.empty()) return false;
    for (int v : p.vertices) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) return false;
    }
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      if (!graph_.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
    }
    return true;
  }

  friend FactorGraph build(const Basis& basis);

 private:
  Basis basis_;
  std::size_t b_ = 0;
  std::vector<EqRel> vertices_;
  Digraph graph_;
  std::vector<VertexFlags> flags_;
  std::unordered_map<EqRel, int> index_;
};

/// Labels of the classes of r that avoid its last b-1 points.
inline std::vector<int> inactive_classes(const EqRel& r, std::size_t b) {
  if (b == 0 || r.size() + 1 < b) {
    throw std::invalid_argument("relation shorter than b - 1");
  }
  std::vector<char> active(static_cast<std::size_t>(r.class_count()) + 1, 0);
  for (std::size_t i = r.size() - (b - 1); i < r.size(); ++i) active[r.label(i)] = 1;
  std::vector<int> out;
  for (int l = 1; l <= r.class_count(); ++l) {
    if (!active[l]) out.push_back(l);
  }
  return out;
}

/// Per-vertex maximum, over walks ending at the vertex, of the class count of
/// an associated relation: start-vertex classes plus one per special vertex
/// entered. Values saturate at `cap`.
inline std::vector<int> max_classes_ending_at(const FactorGraph& g, int cap) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> best(n);
  for (int v = 0; v < n; ++v) best[v] = std::min(cap, g.flags(v).classes);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : g.graph().edges()) {
      const int cand = std::min(cap, best[u] + (g.flags(v).special ? 1 : 0));
      if (cand > best[v]) {
        best[v] = cand;
        changed = true;
      }
    }
  }
  return best;
}

/// A special vertex v is ambiguous when an in-neighbour u ends a walk whose
/// relation can have more classes than u's last b-1 points, i.e. an inactive
/// class.
inline std::vector<bool> classify_ambiguous(const FactorGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  const std::size_t b = g.window();
  const auto best = max_classes_ending_at(g, static_cast<int>(b) + 1);
  std::vector<bool> ambiguous(n, false);
  for (int v = 0; v < n; ++v) {
    if (!g.flags(v).special) continue;
    for (int u : g.graph().predecessors(v)) {
      const int tail_classes = b > 1 ? g.vertex(u).restrict(2, b).class_count() : 0;
      if (best[u] > tail_classes) {
        ambiguous[v] = true;
        break;
      }
    }
  }
  return ambiguous;
}

inline FactorGraph build(const Basis& basis) {
  if (basis.order() != OrderKind::Consecutive) {
    throw std::invalid_argument("factor graphs need a consecutive-order basis");
  }
  if (basis.empty()) throw std::invalid_argument("factor graph of the empty basis is undefined");
  FactorGraph g;
  g.basis_ = basis;
  g.b_ = *basis.max_length();
  const std::size_t b = g.b_;
  g.vertices_ = enumerate(basis, b);
  const int n = static_cast<int>(g.vertices_.size());
  g.graph_ = Digraph(g.vertices_.size());
  for (int v = 0; v < n; ++v) g.index_.emplace(g.vertices_[v], v);

  // Group by prefix so edges come from one pass over suffixes.
  std::unordered_map<EqRel, std::vector<int>> by_prefix;
  if (b > 1) {
    for (int v = 0; v < n; ++v) by_prefix[g.vertices_[v].restrict(1, b - 1)].push_back(v);
  }
  for (int u = 0; u < n; ++u) {
    if (b == 1) {
      for (int v = 0; v < n; ++v) g.graph_.add_edge(u, v);
      continue;
    }
    auto it = by_prefix.find(g.vertices_[u].restrict(2, b));
    if (it == by_prefix.end()) continue;
    for (int v : it->second) g.graph_.add_edge(u, v);
  }

  g.flags_.resize(g.vertices_.size());
  for (int v = 0; v < n; ++v) {
    const auto& r = g.vertices_[v];
    const auto sizes = r.class_size_by_label();
    g.flags_[v].classes = r.class_count();
    g.flags_[v].special = sizes[r.label(b - 1) - 1] == 1;
  }
  const auto ambiguous = classify_ambiguous(g);
  for (int v = 0; v < n; ++v) g.flags_[v].ambiguous = ambiguous[v];
  return g;
}

/// The walk of length-b windows of r.
inline Path path_of(const EqRel& r, const FactorGraph& g) {
  const std::size_t b = g.window();
  if (r.size() < b) {
    throw std::invalid_argument(r.format() + " is shorter than the window length " +
                                std::to_string(b));
  }
  Path p;
  for (std::size_t start = 1; start + b - 1 <= r.size(); ++start) {
    const auto idx = g.index_of(r.restrict(start, start + b - 1));
    if (!idx) throw std::invalid_argument(r.format() + " is not in the avoidance set");
    p.vertices.push_back(*idx);
  }
  return p;
}

namespace detail {

// Class for the next point when the walk enters `target`: for a non-special
// target it is forced to the class of an earlier window point; for a special
// target any of `inactive` or a new class (returned as 0 for "new").
struct StepOptions {
  bool forced = false;
  int forced_label = 0;
  std::vector<int> inactive;
};

inline StepOptions step_options(std::span<const int> labels, const FactorGraph& g, int target) {
  const std::size_t b = g.window();
  const auto& w = g.vertex(target);
  StepOptions opt;
  if (!g.flags(target).special) {
    // Point b of the window shares a class with some earlier window point.
    const int lb = w.label(b - 1);
    for (std::size_t j = 0; j + 1 < b; ++j) {
      if (w.label(j) == lb) {
        opt.forced = true;
        opt.forced_label = labels[labels.size() - (b - 1) + j];
        return opt;
      }
    }
  }
  const int classes = *std::max_element(labels.begin(), labels.end());
  std::vector<char> active(static_cast<std::size_t>(classes) + 1, 0);
  for (std::size_t i = labels.size() - (b - 1); i < labels.size(); ++i) active[labels[i]] = 1;
  for (int l = 1; l <= classes; ++l) {
    if (!active[l]) opt.inactive.push_back(l);
  }
  return opt;
}

}  // namespace detail

/// Chooses the class of the next point at a special vertex: return 0 for a
/// new class, or one of `inactive`. `step` is the index of the vertex being
/// entered along the path.
using SpecialChoice = std::function<int(std::size_t step, const std::vector<int>& inactive)>;

/// Continues r, whose last window is the vertex before `next.front()`, one
/// point per vertex of `next`.
inline EqRel extend_walk(const EqRel& r, std::span<const int> next, const FactorGraph& g,
                         const SpecialChoice& choose, std::size_t first_step = 1) {
  std::vector<int> labels = r.rgs();
  int classes = r.class_count();
  for (std::size_t i = 0; i < next.size(); ++i) {
    const std::size_t step = first_step + i;
    const auto opt = detail::step_options(labels, g, next[i]);
    if (opt.forced) {
      labels.push_back(opt.forced_label);
      continue;
    }
    const int pick = choose ? choose(step, opt.inactive) : 0;
    if (pick == 0) {
      labels.push_back(++classes);
    } else {
      if (std::find(opt.inactive.begin(), opt.inactive.end(), pick) == opt.inactive.end()) {
        throw std::invalid_argument("chosen class is not inactive");
      }
      labels.push_back(pick);
    }
  }
  return EqRel::from_rgs(labels);
}

/// One relation associated with p, built left to right.
inline EqRel realize(const Path& p, const FactorGraph& g, const SpecialChoice& choose) {
  if (!g.is_path(p)) throw std::invalid_argument("not a path in the factor graph");
  return extend_walk(g.vertex(p.vertices.front()),
                     std::span<const int>(p.vertices).subspan(1), g, choose);
}

inline EqRel realize_new_classes(const Path& p, const FactorGraph& g) { return realize(p, g, {}); }

/// Every relation whose window walk is p. Throws BranchLimitExceeded once
/// more than max_count relations would be produced.
inline std::vector<EqRel> relations_of(const Path& p, const FactorGraph& g, std::size_t max_count) {
  if (!g.is_path(p)) throw std::invalid_argument("not a path in the factor graph");
  std::vector<EqRel> out;
  std::vector<int> labels = g.vertex(p.vertices.front()).rgs();
  std::function<void(std::size_t, int)> extend = [&](std::size_t step, int classes) {
    if (step == p.vertices.size()) {
      if (out.size() == max_count) {
        throw BranchLimitExceeded("more than " + std::to_string(max_count) +
                                  " relations on this path");
      }
      out.push_back(EqRel::from_rgs(labels));
      return;
    }
    const auto opt = detail::step_options(labels, g, p.vertices[step]);
    if (opt.forced) {
      labels.push_back(opt.forced_label);
      extend(step + 1, classes);
      labels.pop_back();
      return;
    }
    for (int l : opt.inactive) {
      labels.push_back(l);
      extend(step + 1, classes);
      labels.pop_back();
    }
    labels.push_back(classes + 1);
    extend(step + 1, classes + 1);
    labels.pop_back();
  };
  extend(1, *std::max_element(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<InOutCycle> has_in_out_cycle(const FactorGraph& g) {
  return find_in_out_cycle(g.graph());
}

inline std::optional<Path> special_vertex_in_cycle(const FactorGraph& g) {
  auto c = find_marked_vertex_in_cycle(g.graph(), [&](int v) { return g.flags(v).special; });
  if (!c) return std::nullopt;
  return Path{std::move(*c)};
}

inline bool is_strongly_connected(const FactorGraph& g) { return is_strongly_connected(g.graph()); }

inline std::optional<Bicycle> is_bicycle(const FactorGraph& g) { return find_bicycle(g.graph()); }

/// Largest class count over all members of the avoidance set, or nullopt when
/// unbounded (a special vertex lies on a cycle).
inline std::optional<int> class_bound(const FactorGraph& g) {
  if (special_vertex_in_cycle(g)) return std::nullopt;
  const std::size_t b = g.window();
  int k = 0;
  for (std::size_t len = 1; len < b; ++len) {
    for_each_member(g.basis(), len, [&](const EqRel& r) { k = std::max(k, r.class_count()); });
  }
  const int cap = static_cast<int>(b + g.vertex_count()) + 1;
  for (int c : max_classes_ending_at(g, cap)) k = std::max(k, c);
  return k;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Graphviz rendering. Special vertices are boxes, ambiguous ones red; edges
/// are listed in (source, target) index order, vertices in RGS order.
inline std::string to_dot(const FactorGraph& g) {
  std::ostringstream os;
  os << "digraph factor_graph {\n";
  os << "  node [shape=ellipse];\n";
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    os << "  v" << v << " [label=\"" << detail::dot_escape(g.vertex(v).format()) << "\"";
    if (g.flags(v).special) os << ", shape=box";
    if (g.flags(v).ambiguous) os << ", color=red";
    os << "];\n";
  }
  for (auto [u, v] : g.graph().edges()) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace eqav
