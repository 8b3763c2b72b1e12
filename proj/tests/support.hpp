#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eqav.hpp"

namespace eqav::testing {

inline EqRel rel(const std::string& text) { return EqRel::parse(text); }

inline std::vector<EqRel> rels(const std::vector<std::string>& texts) {
  std::vector<EqRel> out;
  for (const auto& t : texts) out.push_back(rel(t));
  return out;
}

inline Basis cons(const std::vector<std::string>& texts) { return minimize(rels(texts), OrderKind::Consecutive); }
inline Basis noncons(const std::vector<std::string>& texts) {
  return minimize(rels(texts), OrderKind::NonConsecutive);
}

inline std::string data_path(const std::string& name) { return std::string(EQAV_TEST_DATA) + "/" + name; }

inline Basis from_file(const std::string& name, OrderKind order = OrderKind::Consecutive) {
  std::ifstream in(data_path(name));
  std::stringstream buf;
  buf << in.rdbuf();
  return minimize(parse_basis_text(buf.str(), name), order);
}

// The eight relations of length at most 3, in RGS order per length.
inline std::vector<EqRel> short_relations() {
  std::vector<EqRel> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& r : all_relations(n)) out.push_back(r);
  }
  return out;
}

// Every subset of short_relations(), as a raw list; mask bit i picks relation i.
inline std::vector<EqRel> subset(unsigned mask) {
  const auto all = short_relations();
  std::vector<EqRel> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mask & (1u << i)) out.push_back(all[i]);
  }
  return out;
}

inline std::vector<std::pair<int, int>> edge_list(const FactorGraph& g) { return g.graph().edges(); }

inline bool has_edge(const FactorGraph& g, const std::string& u, const std::string& v) {
  return g.graph().has_edge(g.index(rel(u)), g.index(rel(v)));
}

}  // namespace eqav::testing
