#pragma once

// Brute-force reference implementations. Nothing here calls the optimized
// embedding, enumeration or ambiguity code it is used to check.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "eqav/avoidance.hpp"
#include "eqav/factor_graph.hpp"
#include "eqav/relation.hpp"

namespace eqav {

class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

/// Cooperative deadline; check() throws once the time is up. A default
/// constructed deadline never expires.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget)
      : end_(std::chrono::steady_clock::now() + budget) {}

  void check() const {
    if (!end_) return;
    // The clock read is cheap next to the work between checks, but still
    // thin it out.
    if (++ticks_ % 256 != 0) return;
    if (std::chrono::steady_clock::now() >= *end_) throw DeadlineExceeded();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
  mutable unsigned ticks_ = 0;
};

struct SearchBound {
  std::size_t max_length = 12;
  std::optional<std::chrono::milliseconds> deadline;

  Deadline make_deadline() const { return deadline ? Deadline(*deadline) : Deadline(); }
};

namespace oracle_detail {

inline bool same_class(const EqRel& r, std::size_t i, std::size_t j) { return r.label(i) == r.label(j); }

// Point-by-point injection search: f(i) chosen among unused points of big,
// consistent with every earlier pair.
inline bool extend_injection(const EqRel& small, const EqRel& big, std::vector<std::size_t>& f,
                             std::vector<char>& used) {
  const std::size_t i = f.size();
  if (i == small.size()) return true;
  for (std::size_t y = 0; y < big.size(); ++y) {
    if (used[y]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      ok = same_class(small, i, j) == same_class(big, y, f[j]);
    }
    if (!ok) continue;
    f.push_back(y);
    used[y] = 1;
    if (extend_injection(small, big, f, used)) return true;
    used[y] = 0;
    f.pop_back();
  }
  return false;
}

inline bool window_embeds(const EqRel& small, const EqRel& big, std::size_t off) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (same_class(small, i, j) != same_class(big, off + i, off + j)) return false;
    }
  }
  return true;
}

}  // namespace oracle_detail

inline bool embeds_bruteforce(const EqRel& small, const EqRel& big, OrderKind order) {
  if (small.size() > big.size()) return false;
  if (order == OrderKind::Consecutive) {
    for (std::size_t off = 0; off + small.size() <= big.size(); ++off) {
      if (oracle_detail::window_embeds(small, big, off)) return true;
    }
    return false;
  }
  std::vector<std::size_t> f;
  std::vector<char> used(big.size(), 0);
  return oracle_detail::extend_injection(small, big, f, used);
}

inline bool avoids_bruteforce(const EqRel& r, const Basis& basis) {
  for (const auto& e : basis.elements()) {
    if (embeds_bruteforce(e, r, basis.order())) return false;
  }
  return true;
}

/// Pairwise incomparable in both directions.
inline bool verify_antichain(const std::vector<EqRel>& rs, OrderKind order) {
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (i != j && embeds_bruteforce(rs[i], rs[j], order)) return false;
    }
  }
  return true;
}

namespace oracle_detail {

// Candidates of length n in which a sits at offset pa and b at offset pb.
// Labels are chosen in increasing order, so the first complete candidate is
// the lexicographically least one for this placement.
struct Placement {
  const EqRel& a;
  const EqRel& b;
  std::size_t pa, pb, n;
  const Basis& basis;
  const Deadline& deadline;
  std::vector<int> labels;

  bool fits(const EqRel& r, std::size_t off, std::size_t i) const {
    if (i < off || i >= off + r.size()) return true;
    for (std::size_t j = off; j < i; ++j) {
      if ((r.label(i - off) == r.label(j - off)) != (labels[i] == labels[j])) return false;
    }
    return true;
  }

  bool suffix_clear() const {
    const EqRel z = EqRel::from_labels(labels);
    for (const auto& e : basis.elements()) {
      if (e.size() <= z.size() && window_embeds(e, z, z.size() - e.size())) return false;
    }
    return true;
  }

  bool search(int classes) {
    deadline.check();
    const std::size_t i = labels.size();
    if (i == n) return true;
    for (int l = 1; l <= classes + 1; ++l) {
      labels.push_back(l);
      if (fits(a, pa, i) && fits(b, pb, i) && suffix_clear() && search(std::max(classes, l))) {
        return true;
      }
      labels.pop_back();
    }
    return false;
  }
};

inline std::optional<EqRel> jep_cons(const EqRel& a, const EqRel& b, const Basis& basis,
                                     const SearchBound& bound, const Deadline& deadline) {
  // A shortest joint extension can be cut down to the span of the two
  // occurrences, so one of them starts it and one of them ends it.
  for (std::size_t n = std::max(a.size(), b.size()); n <= bound.max_length; ++n) {
    std::optional<EqRel> best;
    for (std::size_t pa = 0; pa + a.size() <= n; ++pa) {
      for (std::size_t pb = 0; pb + b.size() <= n; ++pb) {
        if (std::min(pa, pb) != 0 || std::max(pa + a.size(), pb + b.size()) != n) continue;
        Placement pl{a, b, pa, pb, n, basis, deadline, {}};
        if (pl.search(0)) {
          EqRel z = EqRel::from_labels(pl.labels);
          if (!best || z < *best) best = std::move(z);
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

inline void partitions(int remaining, int cap, std::vector<int>& parts,
                       std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    parts.push_back(p);
    partitions(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

inline std::optional<EqRel> jep_noncons(const EqRel& a, const EqRel& b, const Basis& basis,
                                        const SearchBound& bound, const Deadline& deadline) {
  // Up to isomorphism a relation is its multiset of class sizes; test one
  // block-shaped representative per multiset.
  for (std::size_t n = std::max(a.size(), b.size()); n <= bound.max_length; ++n) {
    std::vector<std::vector<int>> parts_list;
    std::vector<int> parts;
    partitions(static_cast<int>(n), static_cast<int>(n), parts, parts_list);
    std::vector<EqRel> found;
    for (const auto& sizes : parts_list) {
      deadline.check();
      std::vector<int> labels;
      for (std::size_t c = 0; c < sizes.size(); ++c) labels.insert(labels.end(), sizes[c], static_cast<int>(c) + 1);
      EqRel z = EqRel::from_labels(labels);
      if (embeds_bruteforce(a, z, OrderKind::NonConsecutive) &&
          embeds_bruteforce(b, z, OrderKind::NonConsecutive) && avoids_bruteforce(z, basis)) {
        found.push_back(std::move(z));
      }
    }
    if (!found.empty()) return *std::min_element(found.begin(), found.end());
  }
  return std::nullopt;
}

}  // namespace oracle_detail

/// Shortest (then lexicographically least) z in Av(basis) with a <= z and
/// b <= z, of length at most bound.max_length; nullopt if there is none.
/// Throws DeadlineExceeded if the bound's deadline runs out first.
inline std::optional<EqRel> jep_search(const EqRel& a, const EqRel& b, const Basis& basis,
                                       const SearchBound& bound) {
  const Deadline deadline = bound.make_deadline();
  if (basis.order() == OrderKind::Consecutive) return oracle_detail::jep_cons(a, b, basis, bound, deadline);
  return oracle_detail::jep_noncons(a, b, basis, bound, deadline);
}

/// Sigma of a path by filtering every relation of the right length.
inline std::set<EqRel> sigma_bruteforce(const Path& p, const FactorGraph& g) {
  const std::size_t b = g.window();
  const std::size_t n = b + p.length();
  std::set<EqRel> out;
  for_each_rgs(n, [&](std::span<const int> labels) {
    const EqRel r = EqRel::from_rgs(labels);
    if (!avoids_bruteforce(r, g.basis())) return;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (r.restrict(i + 1, i + b) != g.vertex(p.vertices[i])) return;
    }
    out.insert(r);
  });
  return out;
}

/// Ambiguity by searching relations directly: a special vertex v with t
/// classes is ambiguous iff some in-neighbour u ends the window walk of a
/// relation of walk length <= t(n-1) that has an inactive class. States are
/// deduplicated by (last window, number of inactive classes), which fixes
/// every possible continuation.
inline std::vector<bool> ambiguity_sweep(const FactorGraph& g) {
  const std::size_t b = g.window();
  const int n = static_cast<int>(g.vertex_count());
  std::vector<bool> result(n, false);
  if (n == 0) return result;

  auto inactive_count = [&](const std::vector<int>& labels) {
    const int classes = *std::max_element(labels.begin(), labels.end());
    std::vector<char> active(static_cast<std::size_t>(classes) + 1, 0);
    for (std::size_t i = labels.size() - (b - 1); i < labels.size(); ++i) active[labels[i]] = 1;
    return static_cast<int>(std::count(active.begin() + 1, active.end(), 0));
  };
  auto window_of = [&](const std::vector<int>& labels) {
    return EqRel::from_labels(std::vector<int>(labels.end() - static_cast<std::ptrdiff_t>(b), labels.end()));
  };

  int max_t = 0;
  for (int v = 0; v < n; ++v) max_t = std::max(max_t, g.vertex(v).class_count());
  const std::size_t max_len = static_cast<std::size_t>(max_t) * static_cast<std::size_t>(n - 1);

  // first_hit[u]: shortest walk length ending at u with an inactive class.
  std::vector<std::optional<std::size_t>> first_hit(n);
  std::set<std::pair<int, int>> seen;
  std::map<std::pair<int, int>, std::vector<int>> layer;
  for (int v = 0; v < n; ++v) {
    auto labels = g.vertex(v).rgs();
    layer.emplace(std::pair{v, inactive_count(labels)}, std::move(labels));
  }
  for (std::size_t len = 0;; ++len) {
    std::map<std::pair<int, int>, std::vector<int>> next;
    for (auto& [state, labels] : layer) {
      if (!seen.insert(state).second) continue;
      if (state.second > 0 && !first_hit[state.first]) first_hit[state.first] = len;
      if (len == max_len) continue;
      const int classes = *std::max_element(labels.begin(), labels.end());
      for (int l = 1; l <= classes + 1; ++l) {
        auto ext = labels;
        ext.push_back(l);
        const EqRel w = window_of(ext);
        if (!avoids_bruteforce(w, g.basis())) continue;
        // The window is in the set, so it is a vertex.
        const int v = *g.index_of(w);
        next.emplace(std::pair{v, inactive_count(ext)}, std::move(ext));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }

  for (int v = 0; v < n; ++v) {
    if (!g.flags(v).special) continue;
    const std::size_t limit = static_cast<std::size_t>(g.vertex(v).class_count()) * (n - 1);
    for (int u : g.graph().predecessors(v)) {
      if (first_hit[u] && *first_hit[u] <= limit) result[v] = true;
    }
  }
  return result;
}

}  // namespace eqav
