#pragma once

// The digraph structure tests used on factor graphs: strongly connected
// components, in-out cycles, cycles through marked vertices, strong
// connectivity and bicycles.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

namespace eqav {

/// Adjacency lists over vertices 0..n-1. Each out-list is sorted and free of
/// duplicates; in-lists are derived.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  std::size_t vertex_count() const noexcept { return out_.size(); }

  void add_edge(int from, int to) {
    auto& o = out_[from];
    auto it = std::lower_bound(o.begin(), o.end(), to);
    if (it != o.end() && *it == to) return;
    o.insert(it, to);
    auto& i = in_[to];
    i.insert(std::lower_bound(i.begin(), i.end(), from), from);
  }

  bool has_edge(int from, int to) const {
    return std::binary_search(out_[from].begin(), out_[from].end(), to);
  }

  const std::vector<int>& successors(int v) const { return out_[v]; }
  const std::vector<int>& predecessors(int v) const { return in_[v]; }
  std::size_t out_degree(int v) const { return out_[v].size(); }
  std::size_t in_degree(int v) const { return in_[v].size(); }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& o : out_) m += o.size();
    return m;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(out_.size()); ++u) {
      for (int v : out_[u]) out.emplace_back(u, v);
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Strongly connected components. `component[v]` numbers components in
/// topological order of the condensation (sources first).
struct Components {
  std::vector<int> component;
  int count = 0;
};

inline Components strongly_connected_components(const Digraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<int> comp(n, -1);
  int next_index = 0, found = 0;

  // Tarjan emits components in reverse topological order.
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : g.successors(v)) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = found;
      } while (w != v);
      ++found;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  for (int& c : comp) c = found - 1 - c;
  return {std::move(comp), found};
}

// True when v lies on some cycle.
inline bool on_cycle(const Digraph& g, const Components& c, int v) {
  if (g.has_edge(v, v)) return true;
  const int n = static_cast<int>(g.vertex_count());
  for (int w = 0; w < n; ++w) {
    if (w != v && c.component[w] == c.component[v]) return true;
  }
  return false;
}

/// Shortest path from `from` to `to` (vertex sequence including both ends),
/// optionally restricted to vertices satisfying `allowed`. For from == to the
/// result is the single vertex.
inline std::optional<std::vector<int>> shortest_path(
    const Digraph& g, int from, int to, const std::function<bool(int)>& allowed = {}) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> parent(n, -2);
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : g.successors(v)) {
      if (parent[w] != -2 || (allowed && !allowed(w))) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (parent[to] == -2) return std::nullopt;
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Shortest cycle through v, as a closed walk starting and ending at v.
inline std::optional<std::vector<int>> shortest_cycle_through(
    const Digraph& g, int v, const std::function<bool(int)>& allowed = {}) {
  if (g.has_edge(v, v)) return std::vector<int>{v, v};
  std::optional<std::vector<int>> best;
  for (int w : g.successors(v)) {
    if (allowed && !allowed(w)) continue;
    auto back = shortest_path(g, w, v, allowed);
    if (back && (!best || back->size() + 1 < best->size())) {
      std::vector<int> cycle{v};
      cycle.insert(cycle.end(), back->begin(), back->end());
      best = std::move(cycle);
    }
  }
  return best;
}

/// A cycle with a vertex of in-degree >= 2 and a vertex of out-degree >= 2
/// (whole-graph degrees; the two may coincide). `cycle` is the closed walk
/// in_vertex -> ... -> out_vertex -> ... -> in_vertex made of two shortest
/// paths inside one strongly connected component, so in_vertex is entered
/// exactly once and out_vertex is left exactly once along it.
struct InOutCycle {
  std::vector<int> cycle;
  int in_vertex = -1;
  int out_vertex = -1;
};

inline std::optional<InOutCycle> find_in_out_cycle(const Digraph& g) {
  const auto comps = strongly_connected_components(g);
  const int n = static_cast<int>(g.vertex_count());
  for (int c = 0; c < comps.count; ++c) {
    int in_v = -1, out_v = -1;
    bool has_cycle = false;
    int members = 0;
    for (int v = 0; v < n; ++v) {
      if (comps.component[v] != c) continue;
      ++members;
      if (g.has_edge(v, v)) has_cycle = true;
      if (in_v < 0 && g.in_degree(v) >= 2) in_v = v;
      if (out_v < 0 && g.out_degree(v) >= 2) out_v = v;
    }
    if (members > 1) has_cycle = true;
    if (!has_cycle || in_v < 0 || out_v < 0) continue;
    auto inside = [&](int w) { return comps.component[w] == c; };
    InOutCycle result{{}, in_v, out_v};
    if (in_v == out_v) {
      result.cycle = *shortest_cycle_through(g, in_v, inside);
    } else {
      auto there = *shortest_path(g, in_v, out_v, inside);
      auto back = *shortest_path(g, out_v, in_v, inside);
      result.cycle = there;
      result.cycle.insert(result.cycle.end(), back.begin() + 1, back.end());
    }
    return result;
  }
  return std::nullopt;
}

/// A cycle through some vertex satisfying `marked`, as a closed walk starting
/// and ending at that vertex.
inline std::optional<std::vector<int>> find_marked_vertex_in_cycle(
    const Digraph& g, const std::function<bool(int)>& marked) {
  const auto comps = strongly_connected_components(g);
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    if (!marked(v) || !on_cycle(g, comps, v)) continue;
    auto inside = [&](int w) { return comps.component[w] == comps.component[v]; };
    return shortest_cycle_through(g, v, inside);
  }
  return std::nullopt;
}

// Graphs with zero or one vertex count as strongly connected.
inline bool is_strongly_connected(const Digraph& g) {
  return strongly_connected_components(g).count <= 1;
}

/// Initial cycle, connecting path and terminal cycle. Cycles are closed
/// walks starting at their junction vertex (empty when absent); `path` runs
/// from the initial junction to the terminal junction and may be empty.
struct Bicycle {
  std::vector<int> initial_cycle;
  std::vector<int> path;
  std::vector<int> terminal_cycle;
};

namespace detail {

// Closed walk around a component known to be a simple cycle, from `start`.
inline std::vector<int> walk_simple_cycle(const Digraph& g, const Components& comps, int start) {
  std::vector<int> cycle{start};
  int v = start;
  do {
    int next = -1;
    for (int w : g.successors(v)) {
      if (comps.component[w] == comps.component[start]) next = w;
    }
    v = next;
    cycle.push_back(v);
  } while (v != start);
  return cycle;
}

}  // namespace detail

/// Recognizes two disjoint simple cycles joined by a simple path touching the
/// cycles only at its ends; either cycle may be empty, and the path may then
/// be absent. The condensation must be a chain whose inner components are
/// loopless single vertices, whose end components are single vertices or
/// simple cycles, with exactly one edge between consecutive components.
inline std::optional<Bicycle> find_bicycle(const Digraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  if (n == 0) return Bicycle{};
  const auto comps = strongly_connected_components(g);
  const int m = comps.count;
  std::vector<std::vector<int>> members(m);
  for (int v = 0; v < n; ++v) members[comps.component[v]].push_back(v);

  auto is_cycle_component = [&](int c) {
    const auto& vs = members[c];
    std::size_t internal = 0;
    for (int v : vs) {
      for (int w : g.successors(v)) {
        if (comps.component[w] == c) ++internal;
      }
    }
    return internal > 0 && internal == vs.size();
  };
  auto is_plain_vertex = [&](int c) {
    return members[c].size() == 1 && !g.has_edge(members[c][0], members[c][0]);
  };

  std::vector<std::pair<int, int>> bridges(m > 0 ? m - 1 : 0, {-1, -1});
  for (auto [u, v] : g.edges()) {
    const int cu = comps.component[u], cv = comps.component[v];
    if (cu == cv) continue;
    if (cv != cu + 1 || bridges[cu].first != -1) return std::nullopt;
    bridges[cu] = {u, v};
  }
  for (const auto& b : bridges) {
    if (b.first == -1) return std::nullopt;
  }
  for (int c = 0; c < m; ++c) {
    const bool ends = (c == 0 || c == m - 1);
    if (is_plain_vertex(c)) continue;
    if (!ends || !is_cycle_component(c)) return std::nullopt;
  }

  Bicycle result;
  const bool initial = !is_plain_vertex(0);
  const bool terminal = m > 1 && !is_plain_vertex(m - 1);
  if (m == 1) {
    if (initial) {
      result.initial_cycle = detail::walk_simple_cycle(g, comps, members[0][0]);
    } else {
      result.path = {members[0][0]};
    }
    return result;
  }
  const int start = initial ? bridges[0].first : members[0][0];
  if (initial) result.initial_cycle = detail::walk_simple_cycle(g, comps, start);
  if (terminal) {
    result.terminal_cycle = detail::walk_simple_cycle(g, comps, bridges[m - 2].second);
  }
  result.path.push_back(start);
  for (int c = 0; c + 1 < m; ++c) result.path.push_back(bridges[c].second);
  return result;
}

}  // namespace eqav
