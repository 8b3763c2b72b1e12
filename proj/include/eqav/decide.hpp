#pragma once

// Top-level decisions: well-quasi-order and atomicity of Av(B) under either
// order, each with a machine-checked witness where one is cheap to produce.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "eqav/avoidance.hpp"
#include "eqav/factor_graph.hpp"
#include "eqav/oracle.hpp"
#include "eqav/relation.hpp"

namespace eqav {

enum class Property { Wqo, Atomic };

inline std::string_view to_string(Property p) { return p == Property::Wqo ? "wqo" : "atomicity"; }

inline Property parse_property(std::string_view s) {
  if (s == "wqo") return Property::Wqo;
  if (s == "atomicity" || s == "atomic") return Property::Atomic;
  throw ParseError("unknown property '" + std::string(s) + "'", std::string(s));
}

struct Reason {
  std::string theorem;
  std::vector<std::string> clauses;
  friend bool operator==(const Reason&, const Reason&) = default;
};

struct AntichainPrefix {
  std::vector<EqRel> elements;
  friend bool operator==(const AntichainPrefix&, const AntichainPrefix&) = default;
};

// A pair with no joint extension of length <= search_bound. `exhaustive`
// marks pairs known to have none at all.
struct JepFailure {
  EqRel first, second;
  std::size_t search_bound = 0;
  bool exhaustive = false;
  friend bool operator==(const JepFailure&, const JepFailure&) = default;
};

struct JoinElement {
  EqRel first, second, join;
  friend bool operator==(const JoinElement&, const JoinElement&) = default;
};

// Structural evidence from the factor graph when no relation-level
// certificate was found.
struct GraphEvidence {
  std::string kind;
  std::vector<EqRel> walk;
  friend bool operator==(const GraphEvidence&, const GraphEvidence&) = default;
};

using Witness = std::variant<AntichainPrefix, JepFailure, JoinElement, GraphEvidence>;

struct Decision {
  Property property = Property::Wqo;
  OrderKind order = OrderKind::Consecutive;
  bool verdict = false;
  Reason reason;
  std::optional<Witness> witness;
  friend bool operator==(const Decision&, const Decision&) = default;
};

struct DecideOptions {
  std::size_t antichain_size = 10;
  std::optional<std::pair<EqRel, EqRel>> join_pair;
  std::size_t jep_bound = 12;
  std::optional<std::chrono::milliseconds> deadline;
};

class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require_order(const Basis& basis, OrderKind order) {
  if (basis.order() != order) {
    throw std::invalid_argument("basis order is " + std::string(to_string(basis.order())) +
                                ", expected " + std::string(to_string(order)));
  }
}

inline bool class_is_empty(const Basis& basis) { return enumerate(basis, 1).empty(); }

inline std::string flag(const char* name, bool value) {
  return std::string(name) + (value ? ": true" : ": false");
}

// |1 n|2|...|n-1|
inline EqRel two_point_class(std::size_t n) {
  std::vector<int> labels(n);
  for (std::size_t i = 0; i + 1 < n; ++i) labels[i] = static_cast<int>(i) + 1;
  labels[n - 1] = 1;
  return EqRel::from_rgs(labels);
}

inline std::optional<std::vector<EqRel>> two_point_family(const Basis& basis, std::size_t first,
                                                          std::size_t count) {
  std::vector<EqRel> out;
  for (std::size_t n = first; n < first + count; ++n) {
    EqRel r = two_point_class(n);
    if (!avoids(r, basis)) return std::nullopt;
    out.push_back(std::move(r));
  }
  return out;
}

// Two inactive insertions on a cycle through a special vertex: the entry at
// `first_pick` and the final entry join an existing inactive class, every
// other special step opens a new class.
inline std::optional<std::vector<EqRel>> special_cycle_family(const FactorGraph& g,
                                                              const std::vector<int>& cycle,
                                                              std::size_t count, bool pick_last) {
  const int target = cycle.front();
  const int before = cycle[cycle.size() - 2];
  const std::size_t loop = cycle.size() - 1;

  auto path_with_entries = [&](std::size_t rounds) {
    Path p{{before}};
    for (std::size_t r = 0; r < rounds; ++r) {
      for (std::size_t i = 0; i < loop; ++i) p.vertices.push_back(cycle[i]);
    }
    p.vertices.push_back(target);
    return p;
  };
  auto entries_of = [&](const Path& p) {
    std::vector<std::size_t> steps;
    for (std::size_t s = 1; s < p.vertices.size(); ++s) {
      if (p.vertices[s] == target) steps.push_back(s);
    }
    return steps;
  };

  // Earliest entry (after the first) at which opening new classes everywhere
  // so far leaves an inactive class.
  const std::size_t b = g.window();
  std::optional<std::size_t> first_pick;
  for (std::size_t e = 1; e <= b + 2 && !first_pick; ++e) {
    const Path probe = path_with_entries(e);
    const auto steps = entries_of(probe);
    Path head{{probe.vertices.begin(), probe.vertices.begin() + static_cast<std::ptrdiff_t>(steps[e]) }};
    const EqRel r = realize_new_classes(head, g);
    if (!inactive_classes(r, b).empty()) first_pick = e;
  }
  if (!first_pick) return std::nullopt;

  std::vector<EqRel> out;
  for (std::size_t rounds = *first_pick + 1; out.size() < count; ++rounds) {
    const Path p = path_with_entries(rounds);
    const auto steps = entries_of(p);
    const std::size_t s1 = steps[*first_pick], s2 = steps.back();
    bool failed = false;
    auto choose = [&](std::size_t step, const std::vector<int>& inactive) -> int {
      if (step != s1 && step != s2) return 0;
      if (inactive.empty()) {
        failed = true;
        return 0;
      }
      return pick_last ? inactive.back() : inactive.front();
    };
    EqRel r = realize(p, g, choose);
    if (failed) return std::nullopt;
    out.push_back(std::move(r));
  }
  return out;
}

// Paths (p,x)(PQ)^k P (y,q) around an in-out cycle, realized with new
// classes at every special vertex.
inline std::optional<std::vector<EqRel>> in_out_family(const FactorGraph& g, const InOutCycle& ioc,
                                                       std::size_t count) {
  const auto& cyc = ioc.cycle;
  const int x = ioc.in_vertex, y = ioc.out_vertex;
  // cyc runs x .. y .. x; split at the first y after the start.
  std::size_t ypos = 0;
  if (x != y) {
    ypos = static_cast<std::size_t>(std::find(cyc.begin() + 1, cyc.end(), y) - cyc.begin());
  }
  const std::vector<int> P(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(ypos) + 1);
  const std::vector<int> Q(cyc.begin() + static_cast<std::ptrdiff_t>(ypos), cyc.end());
  const int q_pred_of_x = Q[Q.size() - 2];
  const int q_succ_of_y = Q[1];

  std::optional<int> p_in, q_out;
  for (int u : g.graph().predecessors(x)) {
    if (u != q_pred_of_x) {
      p_in = u;
      break;
    }
  }
  for (int w : g.graph().successors(y)) {
    if (w != q_succ_of_y) {
      q_out = w;
      break;
    }
  }
  if (!p_in || !q_out) return std::nullopt;

  std::vector<EqRel> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    Path path{{*p_in}};
    for (std::size_t r = 0; r < k; ++r) {
      path.vertices.insert(path.vertices.end(), P.begin(), P.end() - 1);
      path.vertices.insert(path.vertices.end(), Q.begin(), Q.end() - 1);
    }
    path.vertices.insert(path.vertices.end(), P.begin(), P.end());
    path.vertices.push_back(*q_out);
    out.push_back(realize_new_classes(path, g));
  }
  return out;
}

}  // namespace detail

/// k pairwise-incomparable members of Av(basis) under the consecutive
/// order. Throws NotApplicable when the class is wqo.
inline std::vector<EqRel> antichain_prefix(const Basis& basis, std::size_t k) {
  detail::require_order(basis, OrderKind::Consecutive);
  auto accept = [&](const std::optional<std::vector<EqRel>>& family) {
    return family && verify_antichain(*family, OrderKind::Consecutive);
  };
  const std::size_t b = basis.max_length().value_or(0);
  for (std::size_t first : {std::size_t{4}, std::max<std::size_t>(4, b + 1)}) {
    auto family = detail::two_point_family(basis, first, k);
    if (accept(family)) return *family;
  }
  if (basis.empty() || detail::class_is_empty(basis)) throw NotApplicable("class is wqo");
  const FactorGraph g = build(basis);
  if (auto cyc = special_vertex_in_cycle(g)) {
    for (bool pick_last : {false, true}) {
      auto family = detail::special_cycle_family(g, cyc->vertices, k, pick_last);
      if (accept(family)) return *family;
    }
  }
  if (auto ioc = has_in_out_cycle(g)) {
    auto family = detail::in_out_family(g, *ioc, k);
    if (accept(family)) return *family;
  }
  throw NotApplicable("no antichain construction applies");
}

inline Decision decide_wqo_noncons(const Basis& basis) {
  detail::require_order(basis, OrderKind::NonConsecutive);
  return Decision{Property::Wqo, OrderKind::NonConsecutive, true,
                  Reason{"noncons_finite_basis_wqo", {"every finitely based class is wqo"}},
                  std::nullopt};
}

namespace detail {

// The two largest members of length n, falling back to shorter lengths when
// there are fewer than two.
inline std::optional<std::pair<EqRel, EqRel>> default_pair(const Basis& basis, std::size_t n) {
  std::vector<EqRel> pool;
  for (std::size_t len = n; len >= 1 && pool.size() < 2; --len) {
    auto level = enumerate(basis, len);
    while (!level.empty() && pool.size() < 2) {
      pool.push_back(level.back());
      level.pop_back();
    }
  }
  if (pool.size() < 2) return std::nullopt;
  return std::pair{pool[0], pool[1]};
}

// Class sizes c_i = max(a_i, b_i), the longer sequence supplying the tail.
inline EqRel uniform_join(const EqRel& a, const EqRel& b) {
  auto sa = class_sizes(a).sizes, sb = class_sizes(b).sizes;
  if (sa.size() < sb.size()) std::swap(sa, sb);
  for (std::size_t i = 0; i < sb.size(); ++i) sa[i] = std::max(sa[i], sb[i]);
  return from_block_sizes(sa);
}

}  // namespace detail

inline Decision decide_atomicity_noncons(const Basis& basis, const DecideOptions& opts = {}) {
  detail::require_order(basis, OrderKind::NonConsecutive);
  Decision d{Property::Atomic, OrderKind::NonConsecutive, false, {}, std::nullopt};
  if (!basis.empty() && detail::class_is_empty(basis)) {
    d.verdict = true;
    d.reason = {"empty_class", {"degenerate: the class is empty, so the joint embedding property holds vacuously"}};
    return d;
  }
  const auto bad = std::find_if(basis.elements().begin(), basis.elements().end(),
                                [](const EqRel& e) { return !is_uniform(e); });
  d.verdict = bad == basis.elements().end();
  d.reason.theorem = basis.empty() ? "empty_basis" : "uniform_basis_criterion";
  d.reason.clauses = {detail::flag("all_basis_elements_uniform", d.verdict)};

  if (d.verdict) {
    auto pair = opts.join_pair;
    if (!pair) pair = detail::default_pair(basis, basis.max_length().value_or(2) + 1);
    if (pair) {
      EqRel z = detail::uniform_join(pair->first, pair->second);
      if (avoids(z, basis) && embeds_noncons(pair->first, z) && embeds_noncons(pair->second, z)) {
        d.witness = JoinElement{pair->first, pair->second, std::move(z)};
      }
    }
    return d;
  }

  // alpha: the top-size classes alone; beta: those classes shrunk by one.
  const auto sizes = class_sizes(*bad).sizes;
  const int k = sizes.front();
  std::vector<int> alpha, beta;
  for (int s : sizes) {
    if (s == k) {
      alpha.push_back(k);
      beta.push_back(k - 1);
    } else {
      beta.push_back(s);
    }
  }
  std::sort(beta.rbegin(), beta.rend());
  while (!beta.empty() && beta.back() == 0) beta.pop_back();
  const EqRel a = from_block_sizes(beta), b = from_block_sizes(alpha);
  SearchBound bound{opts.jep_bound, opts.deadline};
  const bool none = !jep_search(a, b, basis, bound);
  if (none) d.witness = JepFailure{a, b, opts.jep_bound, false};
  return d;
}

inline Decision decide_wqo_cons(const Basis& basis, const DecideOptions& opts = {}) {
  detail::require_order(basis, OrderKind::Consecutive);
  Decision d{Property::Wqo, OrderKind::Consecutive, false, {}, std::nullopt};
  if (basis.empty()) {
    d.reason = {"empty_basis", {"all relations: the two-point-class family is an infinite antichain"}};
    d.witness = AntichainPrefix{antichain_prefix(basis, opts.antichain_size)};
    return d;
  }
  if (detail::class_is_empty(basis)) {
    d.verdict = true;
    d.reason = {"empty_class", {"degenerate: the class is empty, so it has no infinite antichain"}};
    return d;
  }
  const FactorGraph g = build(basis);
  const bool in_out = has_in_out_cycle(g).has_value();
  const bool special = special_vertex_in_cycle(g).has_value();
  d.verdict = !in_out && !special;
  d.reason = {"factor_graph_wqo_criterion",
              {detail::flag("in_out_cycle", in_out), detail::flag("special_vertex_in_cycle", special)}};
  if (!d.verdict && opts.antichain_size > 0) {
    d.witness = AntichainPrefix{antichain_prefix(basis, opts.antichain_size)};
  }
  return d;
}

namespace detail {

// Walk-merging join for relations of length >= b: a's walk, then a connecting
// walk opening new classes at special vertices, then b replayed point by
// point (each point joins the image of its class's previous point, or opens
// a new class). `overlap` counts b-windows shared by the two walks.
inline std::optional<EqRel> splice(const EqRel& a, const EqRel& b, const FactorGraph& g,
                                   const std::vector<int>& connector, std::size_t overlap) {
  const std::size_t w = g.window();
  std::vector<int> labels =
      connector.empty() ? a.rgs()
                        : extend_walk(a, std::span<const int>(connector).subspan(1), g, {}).rgs();
  int classes = *std::max_element(labels.begin(), labels.end());
  // b occupies the last w - 1 + overlap positions already, then continues.
  const std::size_t shared = connector.empty() ? (w - 1 + overlap) : w;
  if (shared > labels.size() || shared > b.size()) return std::nullopt;
  const std::size_t offset = labels.size() - shared;
  for (std::size_t i = shared; i < b.size(); ++i) {
    int prev = -1;
    for (std::size_t j = i; j-- > 0;) {
      if (b.label(j) == b.label(i)) {
        prev = static_cast<int>(j);
        break;
      }
    }
    labels.push_back(prev < 0 ? ++classes : labels[offset + static_cast<std::size_t>(prev)]);
  }
  return EqRel::from_rgs(labels);
}

inline bool is_join(const EqRel& a, const EqRel& b, const EqRel& z, const Basis& basis) {
  return avoids(z, basis) && embeds_cons(a, z) && embeds_cons(b, z);
}

// Smallest member of length `len` that contains r, for lifting short inputs
// to the window length.
inline std::optional<EqRel> lift(const EqRel& r, const Basis& basis, std::size_t len) {
  if (r.size() >= len) return r;
  for (const auto& c : enumerate(basis, len)) {
    if (embeds_cons(r, c)) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// A joint extension of a and b built from their factor-graph walks, verified
/// before return; nullopt when no splice succeeds.
inline std::optional<EqRel> cons_join(const EqRel& a0, const EqRel& b0, const FactorGraph& g) {
  const Basis& basis = g.basis();
  const auto la = detail::lift(a0, basis, g.window());
  const auto lb = detail::lift(b0, basis, g.window());
  if (!la || !lb) return std::nullopt;
  if (embeds_cons(*lb, *la)) return *la;
  if (embeds_cons(*la, *lb)) return *lb;
  for (auto [first, second] : {std::pair{*la, *lb}, std::pair{*lb, *la}}) {
    const Path pf = path_of(first, g), ps = path_of(second, g);
    // Shared windows, largest overlap first.
    for (std::size_t o = std::min(pf.vertices.size(), ps.vertices.size()); o >= 1; --o) {
      if (!std::equal(pf.vertices.end() - static_cast<std::ptrdiff_t>(o), pf.vertices.end(),
                      ps.vertices.begin())) {
        continue;
      }
      auto z = detail::splice(first, second, g, {}, o);
      if (z && detail::is_join(a0, b0, *z, basis)) return z;
    }
    if (auto conn = shortest_path(g.graph(), pf.vertices.back(), ps.vertices.front())) {
      if (conn->size() >= 2) {
        auto z = detail::splice(first, second, g, *conn, 0);
        if (z && detail::is_join(a0, b0, *z, basis)) return z;
      }
    }
  }
  return std::nullopt;
}

namespace detail {

// Atomicity of a finite class: a finite poset has the joint embedding
// property exactly when it has one maximal element.
inline Decision finite_atomicity(const Basis& basis, const FactorGraph& g, const DecideOptions& opts) {
  Decision d{Property::Atomic, OrderKind::Consecutive, false, {}, std::nullopt};
  std::vector<EqRel> maximal;
  const std::size_t longest = g.window() + g.vertex_count();
  for (std::size_t len = 1; len <= longest; ++len) {
    const auto level = enumerate(basis, len);
    if (level.empty()) break;
    const auto above = enumerate(basis, len + 1);
    for (const auto& r : level) {
      const bool covered =
          std::any_of(above.begin(), above.end(), [&](const EqRel& s) { return embeds_cons(r, s); });
      if (!covered) maximal.push_back(r);
    }
  }
  d.verdict = maximal.size() == 1;
  d.reason = {"finite_class",
              {"factor graph has no cycle, so the class is finite",
               "maximal_elements: " + std::to_string(maximal.size())}};
  if (!d.verdict) {
    d.witness = JepFailure{maximal[0], maximal[1], opts.jep_bound, true};
  } else {
    auto pair = opts.join_pair ? opts.join_pair : default_pair(basis, g.window() + 1);
    if (pair) d.witness = JoinElement{pair->first, pair->second, maximal[0]};
  }
  return d;
}

}  // namespace detail

inline Decision decide_atomicity_cons(const Basis& basis, const DecideOptions& opts = {}) {
  detail::require_order(basis, OrderKind::Consecutive);
  Decision d{Property::Atomic, OrderKind::Consecutive, true, {}, std::nullopt};
  if (basis.empty()) {
    d.reason = {"empty_basis", {"all relations: concatenating two relations joins them"}};
    auto pair = opts.join_pair ? opts.join_pair : detail::default_pair(basis, 3);
    std::vector<int> labels = pair->first.rgs();
    for (int l : pair->second.rgs()) labels.push_back(l + pair->first.class_count());
    d.witness = JoinElement{pair->first, pair->second, EqRel::from_labels(labels)};
    return d;
  }
  if (detail::class_is_empty(basis)) {
    d.reason = {"empty_class", {"degenerate: the class is empty, so the joint embedding property holds vacuously"}};
    return d;
  }
  const FactorGraph g = build(basis);
  const std::size_t b = g.window();
  bool has_cycle = false;
  {
    const auto comps = strongly_connected_components(g.graph());
    for (int v = 0; v < static_cast<int>(g.vertex_count()) && !has_cycle; ++v) {
      has_cycle = on_cycle(g.graph(), comps, v);
    }
  }
  if (!has_cycle) return detail::finite_atomicity(basis, g, opts);

  // Clause (i): every short member extends to one of length b.
  std::optional<EqRel> stranded;
  const auto top = enumerate(basis, b);
  for (std::size_t len = 1; len < b && !stranded; ++len) {
    for (const auto& s : enumerate(basis, len)) {
      if (std::none_of(top.begin(), top.end(), [&](const EqRel& r) { return embeds_cons(s, r); })) {
        stranded = s;
        break;
      }
    }
  }
  const bool connected = is_strongly_connected(g);
  const bool bicycle = is_bicycle(g).has_value();
  bool any_ambiguous = false;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) any_ambiguous |= g.flags(v).ambiguous;
  const bool clause_ii = connected || (bicycle && !any_ambiguous);
  d.verdict = !stranded && clause_ii;
  d.reason = {"factor_graph_atomicity_criterion",
              {detail::flag("short_members_extend", !stranded), detail::flag("strongly_connected", connected),
               detail::flag("bicycle", bicycle), detail::flag("ambiguous_vertices", any_ambiguous)}};

  if (d.verdict) {
    auto pair = opts.join_pair ? opts.join_pair : detail::default_pair(basis, b + 1);
    if (pair) {
      if (auto z = cons_join(pair->first, pair->second, g)) {
        d.witness = JoinElement{pair->first, pair->second, *z};
      }
    }
    return d;
  }
  if (stranded) {
    // Any joint extension with a length-b member would put the stranded
    // relation inside a length-b window.
    d.witness = JepFailure{*stranded, top.front(), opts.jep_bound, true};
    return d;
  }
  // Look for a failing pair among members of lengths b..2b, shortest pairs
  // first, each searched up to |s| + |r| + b.
  std::vector<EqRel> pool;
  for (std::size_t len = b; len <= 2 * b; ++len) {
    for (auto& r : enumerate(basis, len)) pool.push_back(std::move(r));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) pairs.emplace_back(i, j);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return pool[x.first].size() + pool[x.second].size() < pool[y.first].size() + pool[y.second].size();
  });
  for (auto [i, j] : pairs) {
    if (embeds_cons(pool[i], pool[j]) || embeds_cons(pool[j], pool[i])) continue;
    const SearchBound bound{pool[i].size() + pool[j].size() + b, opts.deadline};
    if (!jep_search(pool[i], pool[j], basis, bound)) {
      d.witness = JepFailure{pool[i], pool[j], bound.max_length, false};
      return d;
    }
  }
  GraphEvidence ev;
  ev.kind = any_ambiguous && bicycle ? "ambiguous_vertex_in_bicycle" : "not_strongly_connected_or_bicycle";
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    if (!any_ambiguous || g.flags(v).ambiguous) ev.walk.push_back(g.vertex(v));
  }
  d.witness = std::move(ev);
  return d;
}

inline Decision decide(const Basis& basis, Property property, const DecideOptions& opts = {}) {
  if (basis.order() == OrderKind::Consecutive) {
    return property == Property::Wqo ? decide_wqo_cons(basis, opts) : decide_atomicity_cons(basis, opts);
  }
  return property == Property::Wqo ? decide_wqo_noncons(basis) : decide_atomicity_noncons(basis, opts);
}

// ---- JSON ---------------------------------------------------------------

using json = nlohmann::ordered_json;

namespace detail {

inline json relations_json(const std::vector<EqRel>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(r.format());
  return a;
}

inline std::vector<EqRel> relations_from(const json& a) {
  std::vector<EqRel> out;
  for (const auto& s : a) out.push_back(EqRel::parse(s.get<std::string>()));
  return out;
}

}  // namespace detail

inline json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        json j;
        if constexpr (std::is_same_v<T, AntichainPrefix>) {
          j["kind"] = "antichain";
          j["elements"] = detail::relations_json(v.elements);
        } else if constexpr (std::is_same_v<T, JepFailure>) {
          j["kind"] = "jep_failure";
          j["pair"] = detail::relations_json({v.first, v.second});
          j["search_bound"] = v.search_bound;
          j["exhaustive"] = v.exhaustive;
        } else if constexpr (std::is_same_v<T, JoinElement>) {
          j["kind"] = "join";
          j["pair"] = detail::relations_json({v.first, v.second});
          j["join"] = v.join.format();
        } else {
          j["kind"] = "graph";
          j["evidence"] = v.kind;
          j["vertices"] = detail::relations_json(v.walk);
        }
        return j;
      },
      w);
}

inline Witness witness_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "antichain") return AntichainPrefix{detail::relations_from(j.at("elements"))};
  if (kind == "jep_failure") {
    auto p = detail::relations_from(j.at("pair"));
    return JepFailure{p.at(0), p.at(1), j.at("search_bound").get<std::size_t>(), j.at("exhaustive").get<bool>()};
  }
  if (kind == "join") {
    auto p = detail::relations_from(j.at("pair"));
    return JoinElement{p.at(0), p.at(1), EqRel::parse(j.at("join").get<std::string>())};
  }
  if (kind == "graph") {
    return GraphEvidence{j.at("evidence").get<std::string>(), detail::relations_from(j.at("vertices"))};
  }
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

inline json to_json(const Decision& d) {
  json j;
  j["property"] = std::string(to_string(d.property));
  j["order"] = std::string(to_string(d.order));
  j["verdict"] = d.verdict;
  j["reason"]["theorem"] = d.reason.theorem;
  j["reason"]["clauses"] = d.reason.clauses;
  j["witness"] = d.witness ? to_json(*d.witness) : json(nullptr);
  return j;
}

inline Decision decision_from_json(const json& j) {
  Decision d;
  d.property = parse_property(j.at("property").get<std::string>());
  d.order = parse_order(j.at("order").get<std::string>());
  d.verdict = j.at("verdict").get<bool>();
  d.reason.theorem = j.at("reason").at("theorem").get<std::string>();
  d.reason.clauses = j.at("reason").at("clauses").get<std::vector<std::string>>();
  if (!j.at("witness").is_null()) d.witness = witness_from_json(j.at("witness"));
  return d;
}

}  // namespace eqav
