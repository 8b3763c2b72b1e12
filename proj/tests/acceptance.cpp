// Acceptance runner: one PASS/FAIL line per criterion, with elapsed time
// against its time budget. `--expect-fail 2,3` makes the exit status reflect
// whether exactly those criteria failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace eqav;
using namespace eqav::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few mismatches of a criterion.
struct Check {
  Outcome out;
  int failures = 0;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    out.pass = false;
    if (failures++ < 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
  Outcome done() {
    if (failures > 3) out.detail += "; " + std::to_string(failures - 3) + " more";
    return out;
  }
};

std::string str(const EqRel& r) { return r.format(); }

std::set<std::pair<std::string, std::string>> named_edges(const FactorGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.graph().edges()) out.insert({g.vertex(u).format(), g.vertex(v).format()});
  return out;
}

template <class G>
std::vector<Path> walks(const G& g, std::size_t length) {
  std::vector<Path> cur;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) cur.push_back({{v}});
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Path> next;
    for (const auto& p : cur) {
      for (int w : g.graph().successors(p.vertices.back())) {
        Path q = p;
        q.vertices.push_back(w);
        next.push_back(std::move(q));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<EqRel> relations_up_to(std::size_t n) {
  std::vector<EqRel> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& r : all_relations(k)) out.push_back(r);
  }
  return out;
}

Outcome single_element_graph() {
  Check c;
  const auto g = build(cons({"|1 2|3|"}));
  const std::set<std::pair<std::string, std::string>> expected = {
      {"|1 2 3|", "|1 2 3|"}, {"|1 3|2|", "|1 3|2|"}, {"|1 3|2|", "|1|2 3|"},  {"|1 3|2|", "|1|2|3|"},
      {"|1|2 3|", "|1 2 3|"}, {"|1|2|3|", "|1 3|2|"}, {"|1|2|3|", "|1|2 3|"}, {"|1|2|3|", "|1|2|3|"}};
  c.expect(g.vertex_count() == 4, "vertices " + std::to_string(g.vertex_count()));
  c.expect(named_edges(g) == expected, "edge set differs");
  return c.done();
}

Outcome six_window_graph() {
  Check c;
  const auto g = build(from_file("six_windows.txt"));
  c.expect(g.vertex_count() == 6, "vertices " + std::to_string(g.vertex_count()));
  c.expect(g.graph().edge_count() == 6,
           "edges " + std::to_string(g.graph().edge_count()) + " (overlap rule adds |1 2 4|3| -> |1 3 4|2|)");
  c.expect(g.flags(g.index(rel("|1|2 3|4|"))).ambiguous, "|1|2 3|4| not ambiguous");
  const auto f = g.flags(g.index(rel("|1 2 3|4|")));
  c.expect(f.special && !f.ambiguous, "|1 2 3|4| flags");
  return c.done();
}

Outcome decision_table() {
  Check c;
  struct Row {
    const char* file;
    OrderKind order;
    Property property;
    bool expected;
  };
  const Row rows[] = {
      {"no_three_chain.txt", OrderKind::Consecutive, Property::Wqo, false},
      {"no_three_chain.txt", OrderKind::Consecutive, Property::Atomic, true},
      {"bicycle.txt", OrderKind::Consecutive, Property::Wqo, true},
      {"bicycle.txt", OrderKind::Consecutive, Property::Atomic, true},
      {"six_windows.txt", OrderKind::Consecutive, Property::Wqo, true},
      {"six_windows.txt", OrderKind::Consecutive, Property::Atomic, false},
      {"uniform.txt", OrderKind::NonConsecutive, Property::Atomic, true},
      {"two_plus_one.txt", OrderKind::NonConsecutive, Property::Atomic, false},
  };
  for (const auto& row : rows) {
    const auto d = decide(from_file(row.file, row.order), row.property);
    c.expect(d.verdict == row.expected, std::string(row.file) + " " + std::string(to_string(row.property)) + "=" +
                                            (d.verdict ? "true" : "false"));
  }
  const auto d_two_plus_one = decide(from_file("two_plus_one.txt", OrderKind::NonConsecutive), Property::Atomic);
  const auto* f = d_two_plus_one.witness ? std::get_if<JepFailure>(&*d_two_plus_one.witness) : nullptr;
  c.expect(f && f->first == rel("|1|2|") && f->second == rel("|1 2|"), "two_plus_one witness pair");
  c.expect(!jep_search(rel("|1|2|"), rel("|1 2|"), from_file("two_plus_one.txt", OrderKind::NonConsecutive), {12, {}}),
           "two_plus_one pair joinable within 12");
  return c.done();
}

Outcome coloured_graph() {
  Check c;
  const auto cg = build_colored(build(from_file("bounded_classes.txt")));
  c.expect(cg.k() == 3, "k " + std::to_string(cg.k()));
  c.expect(cg.vertex_count() == 12, "vertices " + std::to_string(cg.vertex_count()));
  c.expect(cg.graph().edge_count() == 12, "edges " + std::to_string(cg.graph().edge_count()));
  for (int v = 0; v < static_cast<int>(cg.vertex_count()); ++v) {
    const auto& r = cg.vertex(v);
    const bool left = r.base() == rel("|1|2 3 4|");
    if (!left) {
      c.expect(cg.graph().out_degree(v) == 0, r.format() + " has out-edges");
      continue;
    }
    std::set<ColoredEqRel> targets;
    for (int w : cg.graph().successors(v)) targets.insert(cg.vertex(w));
    // The big class keeps its colour as the first class on the right; the
    // new singleton takes either of the other two colours.
    std::set<ColoredEqRel> expected;
    for (int c4 = 1; c4 <= 3; ++c4) {
      if (c4 != r.colours()[1]) expected.insert(ColoredEqRel(rel("|1 2 3|4|"), {r.colours()[1], c4}, 3));
    }
    c.expect(targets == expected, r.format() + " targets");
  }
  return c.done();
}

Outcome antichains() {
  Check c;
  int non_wqo = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    const Basis basis = minimize(subset(mask), OrderKind::Consecutive);
    DecideOptions opts;
    opts.antichain_size = 0;
    if (decide_wqo_cons(basis, opts).verdict) continue;
    ++non_wqo;
    try {
      const auto rs = antichain_prefix(basis, 10);
      bool members = true;
      for (const auto& r : rs) members &= avoids_bruteforce(r, basis);
      c.expect(rs.size() == 10 && verify_antichain(rs, OrderKind::Consecutive) && members,
               "mask " + std::to_string(mask));
    } catch (const std::exception& e) {
      c.expect(false, "mask " + std::to_string(mask) + ": " + e.what());
    }
  }
  auto out = c.done();
  out.detail = std::to_string(non_wqo) + " non-wqo bases" + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome embedding_oracle() {
  Check c;
  const auto all = relations_up_to(6);
  std::size_t pairs = 0;
  for (const auto& s : all) {
    for (const auto& b : all) {
      if (s.size() > b.size()) continue;
      ++pairs;
      c.expect(embeds_cons(s, b) == embeds_bruteforce(s, b, OrderKind::Consecutive), "cons " + str(s) + " " + str(b));
      c.expect(embeds_noncons(s, b) == embeds_bruteforce(s, b, OrderKind::NonConsecutive),
               "noncons " + str(s) + " " + str(b));
    }
  }
  auto out = c.done();
  out.detail = std::to_string(all.size()) + " relations, " + std::to_string(pairs) + " pairs" +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

void decreasing_sequences(std::size_t max_len, int max_entry, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (cur.size() == max_len) return;
  const int top = cur.empty() ? max_entry : cur.back();
  for (int x = top; x >= 1; --x) {
    cur.push_back(x);
    decreasing_sequences(max_len, max_entry, cur, out);
    cur.pop_back();
  }
}

Outcome domination_suite() {
  Check c;
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  decreasing_sequences(5, 6, cur, seqs);
  for (const auto& a : seqs) {
    for (const auto& b : seqs) {
      const ClassSizeSeq sa{a}, sb{b};
      c.expect(dominates(sa, sb) == prefix_dominates(sa, sb), "domination on sequences");
    }
  }
  const auto all = relations_up_to(6);
  for (const auto& s : all) {
    for (const auto& b : all) {
      const auto ss = class_sizes(s), sb = class_sizes(b);
      const bool e = embeds_noncons(s, b);
      c.expect(e == dominates(ss, sb) && e == prefix_dominates(ss, sb) &&
                   e == embeds_bruteforce(s, b, OrderKind::NonConsecutive),
               "three-way " + str(s) + " " + str(b));
    }
  }
  auto out = c.done();
  out.detail = std::to_string(seqs.size()) + " sequences, " + std::to_string(all.size()) + " relations" +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome round_trips() {
  Check c;
  for (const char* f : {"two_plus_one.txt", "six_windows.txt", "three_windows.txt", "bicycle.txt"}) {
    const Basis basis = from_file(f);
    const auto g = build(basis);
    const std::size_t b = g.window();
    for (std::size_t n = b; n <= b + 4; ++n) {
      for (const auto& r : enumerate(basis, n)) {
        const auto rs = relations_of(path_of(r, g), g, 100000);
        c.expect(std::binary_search(rs.begin(), rs.end(), r), std::string(f) + " " + str(r));
      }
    }
    for (std::size_t len = 0; len <= 4; ++len) {
      for (const auto& p : walks(g, len)) {
        for (const auto& s : relations_of(p, g, 100000)) c.expect(path_of(s, g) == p, std::string(f) + " walk");
      }
    }
  }
  const Basis basis = from_file("bounded_classes.txt");
  const auto cg = build_colored(build(basis));
  const std::size_t b = cg.window();
  for (std::size_t len = 0; len <= 4; ++len) {
    for (const auto& p : walks(cg, len)) c.expect(colored_path_of(colored_relation_of(p, cg), cg) == p, "coloured walk");
  }
  std::vector<ColoredEqRel> members;
  for (std::size_t n = b; n <= b + 4; ++n) {
    for (const auto& r : enumerate(basis, n)) {
      if (r.class_count() > cg.k()) continue;
      for (auto& cr : all_colourings(r, cg.k())) {
        c.expect(colored_relation_of(colored_path_of(cr, cg), cg) == cr, "coloured " + cr.format());
        if (n <= b + 3) members.push_back(cr);
      }
    }
  }
  for (const auto& s : members) {
    const auto ps = colored_path_of(s, cg);
    for (const auto& r : members) {
      c.expect(embeds_colored(s, r) == is_subpath(ps, colored_path_of(r, cg)), "order " + s.format() + " " + r.format());
    }
  }
  return c.done();
}

// Pairs of members up to this length must have joint extensions when the
// class is declared atomic.
constexpr std::size_t kPairLength = 6;
constexpr std::size_t kJoinBound = 14;
constexpr std::size_t kFailBound = 12;

struct SweepStats {
  std::size_t certified_true = 0, certified_false = 0, uncertified_false = 0, pairs = 0;
};

bool certified_join(const EqRel& a, const EqRel& b, const EqRel& z, const Basis& basis) {
  return avoids_bruteforce(z, basis) && embeds_bruteforce(a, z, basis.order()) &&
         embeds_bruteforce(b, z, basis.order());
}

// Every pair of short members is joinable: by a verified construction when
// one is at hand, else by the oracle. Returns the first unjoinable pair.
std::optional<std::pair<EqRel, EqRel>> unjoinable_pair(const Basis& basis, SweepStats& stats) {
  std::vector<EqRel> members;
  for (std::size_t n = 1; n <= kPairLength; ++n) {
    for (auto& r : enumerate(basis, n)) members.push_back(r);
  }
  std::optional<FactorGraph> g;
  if (basis.order() == OrderKind::Consecutive && !basis.empty()) g = build(basis);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const auto &a = members[i], &b = members[j];
      ++stats.pairs;
      std::optional<EqRel> z;
      if (basis.order() == OrderKind::NonConsecutive) {
        z = detail::uniform_join(a, b);
      } else if (g) {
        z = cons_join(a, b, *g);
      } else {
        std::vector<int> labels = a.rgs();
        for (int l : b.rgs()) labels.push_back(l + a.class_count());
        z = EqRel::from_labels(labels);
      }
      if (z && certified_join(a, b, *z, basis)) continue;
      if (!jep_search(a, b, basis, {kJoinBound, {}})) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

// A pair with no joint extension within its search bound: the decision's
// own witness if it has one, else any pair of short members.
bool failing_pair(const Basis& basis, const Decision& d) {
  if (d.witness) {
    if (const auto* f = std::get_if<JepFailure>(&*d.witness)) {
      return !jep_search(f->first, f->second, basis, {std::max(f->search_bound, kFailBound), {}});
    }
  }
  const std::size_t b = basis.max_length().value_or(1);
  std::vector<EqRel> members;
  for (std::size_t n = 1; n <= 2 * b; ++n) {
    for (auto& r : enumerate(basis, n)) members.push_back(r);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::size_t bound = std::max(kFailBound, members[i].size() + members[j].size() + b);
      if (!jep_search(members[i], members[j], basis, {bound, {}})) return true;
    }
  }
  return false;
}

Outcome atomicity_sweep() {
  Check c;
  SweepStats stats;
  for (auto order : {OrderKind::Consecutive, OrderKind::NonConsecutive}) {
    for (unsigned mask = 0; mask < 256; ++mask) {
      const Basis basis = minimize(subset(mask), order);
      const auto d = decide(basis, Property::Atomic);
      const std::string tag = std::string(to_string(order)) + " mask " + std::to_string(mask);
      if (d.verdict) {
        const auto bad = unjoinable_pair(basis, stats);
        c.expect(!bad, tag + ": " + (bad ? str(bad->first) + " " + str(bad->second) : "") + " unjoinable");
        if (!bad) ++stats.certified_true;
      } else if (failing_pair(basis, d)) {
        ++stats.certified_false;
      } else {
        ++stats.uncertified_false;
        c.expect(false, tag + ": no failing pair within bound");
      }
    }
  }
  auto out = c.done();
  out.detail = std::to_string(stats.certified_true) + " atomic bases joined (" + std::to_string(stats.pairs) +
               " pairs), " + std::to_string(stats.certified_false) + " non-atomic with failing pair" +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome ambiguity_crosscheck() {
  Check c;
  std::size_t graphs = 0, ambiguous = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    const Basis basis = minimize(subset(mask), OrderKind::Consecutive);
    if (basis.empty()) continue;
    const auto g = build(basis);
    ++graphs;
    const auto sweep = ambiguity_sweep(g);
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
      ambiguous += g.flags(v).ambiguous ? 1 : 0;
      c.expect(sweep[v] == g.flags(v).ambiguous, "mask " + std::to_string(mask) + " " + str(g.vertex(v)));
    }
  }
  auto out = c.done();
  out.detail = std::to_string(graphs) + " graphs, " + std::to_string(ambiguous) + " ambiguous vertices" +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail") {
      std::stringstream ss(argv[i + 1]);
      for (std::string tok; std::getline(ss, tok, ',');) expect_fail.insert(std::stoi(tok));
    }
  }
  const std::vector<Criterion> criteria = {
      {1, "single-element basis graph", 1, single_element_graph},
      {2, "six-window basis graph", 1, six_window_graph},
      {3, "decision table", 5, decision_table},
      {4, "coloured graph", 1, coloured_graph},
      {5, "antichain certificates", 60, antichains},
      {6, "embedding oracle equivalence", 120, embedding_oracle},
      {7, "domination property suite", 30, domination_suite},
      {8, "walk/relation round trips", 60, round_trips},
      {9, "atomicity vs oracle sweep", 600, atomicity_sweep},
      {10, "ambiguity cross-check", 600, ambiguity_crosscheck},
  };
  std::set<int> failed;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= cr.budget_s;
    if (!in_time) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!o.pass) failed.insert(cr.id);
    std::printf("%s criterion %d: %s [%.2fs / %.0fs]%s%s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.budget_s, o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expect_fail) {
    if (!expect_fail.empty()) std::printf("failures differ from the expected set\n");
    return 1;
  }
  return 0;
}
