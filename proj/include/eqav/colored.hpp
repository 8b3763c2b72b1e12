#pragma once

// k-coloured relations and the coloured factor graph, where every class
// carries a distinct colour. Here paths and relations correspond one to one.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqav/factor_graph.hpp"

namespace eqav {

class ColoredEqRel {
 public:
  ColoredEqRel() = default;

  /// colours[l - 1] is the colour of class label l; colours lie in 1..k and
  /// are pairwise distinct.
  ColoredEqRel(EqRel base, std::vector<int> colours, int k)
      : base_(std::move(base)), colours_(std::move(colours)), k_(k) {
    if (colours_.size() != static_cast<std::size_t>(base_.class_count())) {
      throw std::invalid_argument("one colour per class required");
    }
    std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
    for (int c : colours_) {
      if (c < 1 || c > k_) throw std::invalid_argument("colour out of range");
      if (seen[c]) throw std::invalid_argument("colouring is not injective");
      seen[c] = 1;
    }
  }

  const EqRel& base() const noexcept { return base_; }
  const std::vector<int>& colours() const noexcept { return colours_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return base_.size(); }
  int colour_of_label(int label) const { return colours_[label - 1]; }
  // Colour of the class of point i (0-based).
  int colour_at(std::size_t i) const { return colours_[base_.label(i) - 1]; }

  /// Points lo..hi (1-based, inclusive) with colours carried over.
  ColoredEqRel restrict(std::size_t lo, std::size_t hi) const {
    EqRel r = base_.restrict(lo, hi);
    std::vector<int> cs(static_cast<std::size_t>(r.class_count()), 0);
    for (std::size_t i = lo; i <= hi; ++i) cs[r.label(i - lo) - 1] = colour_at(i - 1);
    return ColoredEqRel(std::move(r), std::move(cs), k_);
  }

  /// Bar notation followed by the class colours in class order, e.g.
  /// "|1|2 3 4| c=3,1".
  std::string format() const {
    std::string out = base_.format() + " c=";
    for (std::size_t i = 0; i < colours_.size(); ++i) {
      out += (i ? "," : "") + std::to_string(colours_[i]);
    }
    return out;
  }

  friend bool operator==(const ColoredEqRel&, const ColoredEqRel&) = default;
  friend auto operator<=>(const ColoredEqRel& a, const ColoredEqRel& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.colours_ <=> b.colours_;
  }

 private:
  EqRel base_;
  std::vector<int> colours_;
  int k_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ColoredEqRel& r) { return os << r.format(); }

}  // namespace eqav

template <>
struct std::hash<eqav::ColoredEqRel> {
  std::size_t operator()(const eqav::ColoredEqRel& r) const noexcept {
    std::size_t h = std::hash<eqav::EqRel>{}(r.base());
    for (int c : r.colours()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
    return h;
  }
};

namespace eqav {

/// A window of big that matches small as a relation and agrees on colours.
inline bool embeds_colored(const ColoredEqRel& small, const ColoredEqRel& big) {
  if (small.k() != big.k()) throw std::invalid_argument("colourings use different k");
  if (small.size() > big.size()) return false;
  for (std::size_t off = 0; off + small.size() <= big.size(); ++off) {
    bool ok = true;
    for (std::size_t i = 0; i < small.size() && ok; ++i) {
      ok = small.colour_at(i) == big.colour_at(off + i);
    }
    // Colours are injective on both sides, so matching colours pointwise
    // already matches the classes.
    if (ok) return true;
  }
  return false;
}

/// Every injective colouring of r into 1..k, in lexicographic order.
inline std::vector<ColoredEqRel> all_colourings(const EqRel& r, int k) {
  std::vector<ColoredEqRel> out;
  const int m = r.class_count();
  std::vector<int> cs;
  std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cs.size()) == m) {
      out.emplace_back(r, cs, k);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      cs.push_back(c);
      self(self);
      cs.pop_back();
      used[c] = 0;
    }
  };
  rec(rec);
  return out;
}

class ColoredFactorGraph {
 public:
  std::size_t window() const noexcept { return b_; }
  int k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<ColoredEqRel>& vertices() const noexcept { return vertices_; }
  const ColoredEqRel& vertex(int v) const { return vertices_[v]; }
  const Digraph& graph() const noexcept { return graph_; }

  std::optional<int> index_of(const ColoredEqRel& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
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

  friend ColoredFactorGraph build_colored(const FactorGraph& g, int k);

 private:
  std::size_t b_ = 0;
  int k_ = 0;
  std::vector<ColoredEqRel> vertices_;
  Digraph graph_;
  std::unordered_map<ColoredEqRel, int> index_;
};

inline ColoredFactorGraph build_colored(const FactorGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  ColoredFactorGraph cg;
  cg.b_ = g.window();
  cg.k_ = k;
  for (const auto& v : g.vertices()) {
    if (v.class_count() > k) throw std::invalid_argument("k is smaller than a vertex's class count");
    for (auto& c : all_colourings(v, k)) cg.vertices_.push_back(std::move(c));
  }
  const int n = static_cast<int>(cg.vertices_.size());
  cg.graph_ = Digraph(cg.vertices_.size());
  for (int v = 0; v < n; ++v) cg.index_.emplace(cg.vertices_[v], v);
  const std::size_t b = cg.b_;
  if (b == 1) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) cg.graph_.add_edge(u, v);
    }
    return cg;
  }
  std::unordered_map<ColoredEqRel, std::vector<int>> by_prefix;
  for (int v = 0; v < n; ++v) by_prefix[cg.vertices_[v].restrict(1, b - 1)].push_back(v);
  for (int u = 0; u < n; ++u) {
    auto it = by_prefix.find(cg.vertices_[u].restrict(2, b));
    if (it == by_prefix.end()) continue;
    for (int v : it->second) cg.graph_.add_edge(u, v);
  }
  return cg;
}

/// Builds with k = the class bound of the avoidance set; throws when the set
/// has unboundedly many classes.
inline ColoredFactorGraph build_colored(const FactorGraph& g) {
  const auto k = class_bound(g);
  if (!k) throw std::invalid_argument("class count is unbounded (special vertex on a cycle)");
  return build_colored(g, std::max(*k, 1));
}

inline Path colored_path_of(const ColoredEqRel& r, const ColoredFactorGraph& g) {
  const std::size_t b = g.window();
  if (r.size() < b) throw std::invalid_argument("relation is shorter than the window length");
  if (r.k() != g.k()) throw std::invalid_argument("colourings use different k");
  Path p;
  for (std::size_t start = 1; start + b - 1 <= r.size(); ++start) {
    const auto idx = g.index_of(r.restrict(start, start + b - 1));
    if (!idx) throw std::invalid_argument(r.format() + " is not in the coloured avoidance set");
    p.vertices.push_back(*idx);
  }
  return p;
}

/// The unique coloured relation along p: each new point joins the class of
/// its colour if one exists, otherwise it opens a new class.
inline ColoredEqRel colored_relation_of(const Path& p, const ColoredFactorGraph& g) {
  if (!g.is_path(p)) throw std::invalid_argument("not a path in the coloured factor graph");
  const auto& first = g.vertex(p.vertices.front());
  std::vector<int> labels = first.base().rgs();
  std::vector<int> colours = first.colours();
  std::vector<int> label_of_colour(static_cast<std::size_t>(g.k()) + 1, 0);
  for (std::size_t l = 0; l < colours.size(); ++l) label_of_colour[colours[l]] = static_cast<int>(l) + 1;
  const std::size_t b = g.window();
  for (std::size_t step = 1; step < p.vertices.size(); ++step) {
    const int c = g.vertex(p.vertices[step]).colour_at(b - 1);
    if (label_of_colour[c] == 0) {
      colours.push_back(c);
      label_of_colour[c] = static_cast<int>(colours.size());
    }
    labels.push_back(label_of_colour[c]);
  }
  return ColoredEqRel(EqRel::from_rgs(labels), std::move(colours), g.k());
}

namespace detail {

inline constexpr std::array<const char*, 12> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

}  // namespace detail

/// Graphviz rendering with one table cell per class, filled by colour and
/// subscripted with the colour index.
inline std::string to_dot(const ColoredFactorGraph& g) {
  std::ostringstream os;
  os << "digraph colored_factor_graph {\n";
  os << "  node [shape=plaintext];\n";
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    const auto& r = g.vertex(v);
    std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(r.base().class_count()));
    for (std::size_t i = 0; i < r.size(); ++i) classes[r.base().label(i) - 1].push_back(i + 1);
    os << "  v" << v << " [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\"><TR>";
    for (std::size_t l = 0; l < classes.size(); ++l) {
      const int c = r.colours()[l];
      os << "<TD BGCOLOR=\"" << detail::kPalette[(c - 1) % detail::kPalette.size()] << "\">";
      for (std::size_t j = 0; j < classes[l].size(); ++j) os << (j ? " " : "") << classes[l][j];
      os << "<SUB>" << c << "</SUB></TD>";
    }
    os << "</TR></TABLE>>];\n";
  }
  for (auto [u, v] : g.graph().edges()) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace eqav
