#pragma once

// Bases, avoidance-set membership, and length-indexed enumeration of Av(B).

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eqav/relation.hpp"

namespace eqav {

enum class OrderKind { NonConsecutive, Consecutive };

inline std::string_view to_string(OrderKind o) {
  return o == OrderKind::Consecutive ? "cons" : "noncons";
}

inline OrderKind parse_order(std::string_view s) {
  if (s == "cons" || s == "consecutive") return OrderKind::Consecutive;
  if (s == "noncons" || s == "nonconsecutive" || s == "non-consecutive") {
    return OrderKind::NonConsecutive;
  }
  throw ParseError("unknown order '" + std::string(s) + "'", std::string(s));
}

inline bool embeds(const EqRel& small, const EqRel& big, OrderKind order) {
  return order == OrderKind::Consecutive ? embeds_cons(small, big) : embeds_noncons(small, big);
}

/// A finite antichain of forbidden relations under one order. Built through
/// minimize(), which drops non-minimal elements.
class Basis {
 public:
  Basis() = default;

  const std::vector<EqRel>& elements() const noexcept { return elements_; }
  OrderKind order() const noexcept { return order_; }
  bool empty() const noexcept { return elements_.empty(); }
  // Maximum element length; nullopt for the empty basis.
  std::optional<std::size_t> max_length() const {
    if (elements_.empty()) return std::nullopt;
    std::size_t b = 0;
    for (const auto& e : elements_) b = std::max(b, e.size());
    return b;
  }

  friend Basis minimize(std::vector<EqRel> raw, OrderKind order);
  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  std::vector<EqRel> elements_;
  OrderKind order_ = OrderKind::Consecutive;
};

inline Basis minimize(std::vector<EqRel> raw, OrderKind order) {
  // Non-consecutive isomorphism only sees class sizes; pick one form per size
  // multiset so mutually embeddable copies collapse instead of both dropping.
  if (order == OrderKind::NonConsecutive) {
    for (auto& r : raw) r = from_block_sizes(class_sizes(r));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  Basis basis;
  basis.order_ = order;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < raw.size() && minimal; ++j) {
      if (i != j && embeds(raw[j], raw[i], order)) minimal = false;
    }
    if (minimal) basis.elements_.push_back(raw[i]);
  }
  return basis;
}

inline bool avoids(const EqRel& r, const Basis& basis) {
  return std::none_of(basis.elements().begin(), basis.elements().end(),
                      [&](const EqRel& e) { return embeds(e, r, basis.order()); });
}

namespace detail {

// Does a basis element occur as the window of `labels` ending at its last
// point? `labels` is a valid RGS prefix.
inline bool suffix_hits_basis(std::span<const int> labels, const Basis& basis) {
  for (const auto& e : basis.elements()) {
    if (e.size() > labels.size()) continue;
    const auto window = labels.subspan(labels.size() - e.size());
    if (EqRel::from_labels(window) == e) return true;
  }
  return false;
}

template <typename F>
void extend_cons(std::vector<int>& labels, int max_label, std::size_t n, const Basis& basis,
                 F& f) {
  if (labels.size() == n) {
    f(EqRel::from_rgs(labels));
    return;
  }
  for (int l = 1; l <= max_label + 1; ++l) {
    labels.push_back(l);
    if (!suffix_hits_basis(labels, basis)) extend_cons(labels, std::max(max_label, l), n, basis, f);
    labels.pop_back();
  }
}

// Weakly decreasing sequences summing to `remaining`, each entry <= cap.
template <typename F>
void for_each_partition(int remaining, int cap, std::vector<int>& parts, F& f) {
  if (remaining == 0) {
    f(parts);
    return;
  }
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(remaining - p, p, parts, f);
    parts.pop_back();
  }
}

}  // namespace detail

/// Visits every member of Av(basis) of length exactly n. Consecutive order:
/// every canonical relation, by RGS extension with suffix-window filtering.
/// Non-consecutive order: one representative per isomorphism class (class
/// sizes), materialized as contiguous blocks largest first. Order of visits is
/// unspecified; enumerate() sorts.
template <typename F>
void for_each_member(const Basis& basis, std::size_t n, F&& f) {
  if (n == 0) return;
  if (basis.order() == OrderKind::Consecutive) {
    std::vector<int> labels{1};
    if (detail::suffix_hits_basis(labels, basis)) return;
    detail::extend_cons(labels, 1, n, basis, f);
    return;
  }
  std::vector<ClassSizeSeq> forbidden;
  for (const auto& e : basis.elements()) forbidden.push_back(class_sizes(e));
  std::vector<int> parts;
  auto visit = [&](const std::vector<int>& sizes) {
    const ClassSizeSeq seq{sizes};
    for (const auto& fb : forbidden) {
      if (prefix_dominates(fb, seq)) return;
    }
    f(from_block_sizes(seq));
  };
  detail::for_each_partition(static_cast<int>(n), static_cast<int>(n), parts, visit);
}

/// Members of length n, sorted by RGS.
inline std::vector<EqRel> enumerate(const Basis& basis, std::size_t n) {
  std::vector<EqRel> out;
  for_each_member(basis, n, [&](const EqRel& r) { out.push_back(r); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Parses a basis file: one relation per line (bar or RGS notation), `#`
/// comment lines and blank lines ignored. Errors name the source, line and
/// offending token.
inline std::vector<EqRel> parse_basis_text(std::string_view text, std::string_view source) {
  std::vector<EqRel> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    try {
      out.push_back(EqRel::parse(trimmed));
    } catch (const ParseError& e) {
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": " + e.what() +
                           " (token '" + e.token() + "')",
                       e.token());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": " + e.what(),
                       std::string(trimmed));
    }
  }
  return out;
}

}  // namespace eqav
