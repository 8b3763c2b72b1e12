#pragma once

// Finite equivalence relations on [1, n] in restricted-growth form, and the
// order predicates between them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqav {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

// Class sizes sorted largest first.
struct ClassSizeSeq {
  std::vector<int> sizes;

  std::size_t size() const noexcept { return sizes.size(); }
  int operator[](std::size_t i) const { return sizes[i]; }
  auto operator<=>(const ClassSizeSeq&) const = default;
};

/// An equivalence relation on the points 1..n, stored as its restricted-growth
/// string: label(i) is the class of point i + 1, classes numbered 1, 2, ... in
/// order of first appearance. Two relations compare equal exactly when they
/// are isomorphic via the order-preserving bijection, so consecutive
/// isomorphism is plain equality.
class EqRel {
 public:
  using Label = std::uint8_t;

  EqRel() = default;

  /// Throws std::invalid_argument unless `rgs` is a nonempty restricted-growth
  /// string with 1-based labels.
  static EqRel from_rgs(std::span<const int> rgs) {
    if (rgs.empty()) throw std::invalid_argument("empty relation");
    if (rgs.size() > 255) throw std::invalid_argument("relation longer than 255 points");
    EqRel r;
    r.labels_.reserve(rgs.size());
    int max_label = 0;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      const int l = rgs[i];
      if (l < 1 || l > max_label + 1) {
        throw std::invalid_argument("invalid restricted-growth label " + std::to_string(l) +
                                    " at position " + std::to_string(i + 1));
      }
      max_label = std::max(max_label, l);
      r.labels_.push_back(static_cast<Label>(l));
    }
    r.classes_ = max_label;
    return r;
  }

  static EqRel from_rgs(std::initializer_list<int> rgs) {
    return from_rgs(std::span<const int>(rgs.begin(), rgs.size()));
  }

  /// Normalizes arbitrary class labels (any values, equal value = same class)
  /// into canonical form.
  template <typename T>
  static EqRel from_labels(std::span<const T> labels) {
    if (labels.empty()) throw std::invalid_argument("empty relation");
    EqRel r;
    r.labels_.resize(labels.size());
    std::vector<T> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find(seen.begin(), seen.end(), labels[i]);
      if (it == seen.end()) {
        seen.push_back(labels[i]);
        r.labels_[i] = static_cast<Label>(seen.size());
      } else {
        r.labels_[i] = static_cast<Label>(it - seen.begin() + 1);
      }
    }
    r.classes_ = static_cast<int>(seen.size());
    return r;
  }

  template <typename T>
  static EqRel from_labels(const std::vector<T>& labels) {
    return from_labels(std::span<const T>(labels));
  }

  /// Parses bar notation `|1 2|3|` or RGS notation `1 1 2`.
  static EqRel parse(std::string_view text);

  std::size_t size() const noexcept { return labels_.size(); }
  int class_count() const noexcept { return classes_; }
  // 0-based point index, 1-based class label.
  int label(std::size_t i) const { return labels_[i]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  std::vector<int> rgs() const { return {labels_.begin(), labels_.end()}; }

  /// (this restricted to points lo..hi, 1-based inclusive), renumbered onto
  /// 1..hi-lo+1.
  EqRel restrict(std::size_t lo, std::size_t hi) const {
    if (lo < 1 || lo > hi || hi > size()) {
      throw std::out_of_range("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "] outside relation of length " + std::to_string(size()));
    }
    return from_labels(labels().subspan(lo - 1, hi - lo + 1));
  }

  // Sizes of classes indexed by label - 1.
  std::vector<int> class_size_by_label() const {
    std::vector<int> out(static_cast<std::size_t>(classes_), 0);
    for (Label l : labels_) ++out[l - 1];
    return out;
  }

  std::string format() const;
  std::string format_rgs() const;

  friend bool operator==(const EqRel&, const EqRel&) = default;
  friend auto operator<=>(const EqRel& a, const EqRel& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<Label> labels_;
  int classes_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const EqRel& r) { return os << r.format(); }

inline std::string EqRel::format() const {
  std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(classes_));
  for (std::size_t i = 0; i < labels_.size(); ++i) classes[labels_[i] - 1].push_back(i + 1);
  std::string out = "|";
  for (const auto& cls : classes) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(cls[j]);
    }
    out += '|';
  }
  return out;
}

inline std::string EqRel::format_rgs() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels_[i]);
  }
  return out;
}

namespace detail {

inline bool parse_uint(std::string_view tok, int& value) {
  if (tok.empty() || tok.size() > 6) return false;
  value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  return true;
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline EqRel parse_bar(std::string_view text) {
  if (text.back() != '|') throw ParseError("unterminated bar notation", std::string(text));
  std::vector<std::vector<int>> classes;
  std::size_t pos = 1;
  while (pos < text.size()) {
    const auto next = text.find('|', pos);
    const std::string_view body = text.substr(pos, next - pos);
    if (body.empty()) throw ParseError("empty class", "||");
    std::vector<int> points;
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto space = body.find(' ', start);
      const auto tok = body.substr(start, space == std::string_view::npos ? body.npos : space - start);
      int value = 0;
      if (!parse_uint(tok, value)) {
        throw ParseError("invalid point '" + std::string(tok) + "'", std::string(tok));
      }
      points.push_back(value);
      if (space == std::string_view::npos) break;
      start = space + 1;
    }
    classes.push_back(std::move(points));
    pos = next + 1;
  }
  std::size_t n = 0;
  for (const auto& c : classes) n += c.size();
  std::vector<int> labels(n, 0);
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    for (int p : classes[ci]) {
      if (p < 1 || static_cast<std::size_t>(p) > n) {
        throw ParseError("point " + std::to_string(p) + " outside 1.." + std::to_string(n),
                         std::to_string(p));
      }
      if (labels[p - 1] != 0) {
        throw ParseError("duplicate point " + std::to_string(p), std::to_string(p));
      }
      labels[p - 1] = static_cast<int>(ci) + 1;
    }
  }
  return EqRel::from_labels(labels);
}

inline EqRel parse_rgs(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto space = text.find_first_of(" \t", start);
    const auto tok = text.substr(start, space == std::string_view::npos ? text.npos : space - start);
    if (!tok.empty()) {
      int value = 0;
      if (!parse_uint(tok, value)) {
        throw ParseError("invalid RGS entry '" + std::string(tok) + "'", std::string(tok));
      }
      const int max_so_far = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
      if (value < 1 || value > max_so_far + 1) {
        throw ParseError("RGS entry " + std::string(tok) + " breaks restricted growth",
                         std::string(tok));
      }
      values.push_back(value);
    }
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
  if (values.empty()) throw ParseError("empty relation", std::string(text));
  return EqRel::from_rgs(values);
}

}  // namespace detail

inline EqRel EqRel::parse(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty relation", "");
  if (text.front() == '|') return detail::parse_bar(text);
  if (text.find('|') != std::string_view::npos) {
    throw ParseError("bar notation must start with '|'", std::string(text));
  }
  return detail::parse_rgs(text);
}

inline ClassSizeSeq class_sizes(const EqRel& r) {
  ClassSizeSeq s{r.class_size_by_label()};
  std::sort(s.sizes.begin(), s.sizes.end(), std::greater<>());
  return s;
}

inline bool prefix_dominates(const ClassSizeSeq& a, const ClassSizeSeq& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Subsequence domination; greedy earliest match is optimal.
inline bool dominates(const ClassSizeSeq& a, const ClassSizeSeq& b) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    while (j < b.size() && b[j] < a[i]) ++j;
    if (j == b.size()) return false;
    ++j;
  }
  return true;
}

inline bool embeds_noncons(const EqRel& small, const EqRel& big) {
  return prefix_dominates(class_sizes(small), class_sizes(big));
}

namespace detail {

// Does big[offset, offset + |small|) have the same pattern as small?
inline bool window_matches(const EqRel& small, const EqRel& big, std::size_t offset) {
  // small is canonical, so map small labels to big labels and check both ways.
  std::vector<int> fwd(static_cast<std::size_t>(small.class_count()) + 1, 0);
  std::vector<int> back(static_cast<std::size_t>(big.class_count()) + 1, 0);
  for (std::size_t i = 0; i < small.size(); ++i) {
    const int s = small.label(i);
    const int g = big.label(offset + i);
    if (fwd[s] == 0 && back[g] == 0) {
      fwd[s] = g;
      back[g] = s;
    } else if (fwd[s] != g || back[g] != s) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline bool embeds_cons(const EqRel& small, const EqRel& big) {
  if (small.size() > big.size()) return false;
  for (std::size_t k = 0; k + small.size() <= big.size(); ++k) {
    if (detail::window_matches(small, big, k)) return true;
  }
  return false;
}

inline bool is_uniform(const EqRel& r) {
  const auto sizes = r.class_size_by_label();
  return std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes.front(); });
}

/// Relation whose classes are contiguous blocks with the given sizes, in the
/// given order.
inline EqRel from_block_sizes(std::span<const int> sizes) {
  std::vector<int> labels;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] < 1) throw std::invalid_argument("class sizes must be positive");
    labels.insert(labels.end(), static_cast<std::size_t>(sizes[c]), static_cast<int>(c) + 1);
  }
  return EqRel::from_rgs(labels);
}

inline EqRel from_block_sizes(const ClassSizeSeq& s) { return from_block_sizes(s.sizes); }

/// Calls f(rgs) for every restricted-growth string of length n, in
/// lexicographic order.
template <typename F>
void for_each_rgs(std::size_t n, F&& f) {
  if (n == 0) return;
  std::vector<int> rgs(n, 1);
  std::vector<int> prefix_max(n, 1);
  while (true) {
    f(std::span<const int>(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 1;
      prefix_max[j] = prefix_max[i];
    }
  }
}

inline std::vector<EqRel> all_relations(std::size_t n) {
  std::vector<EqRel> out;
  for_each_rgs(n, [&](std::span<const int> rgs) { out.push_back(EqRel::from_rgs(rgs)); });
  return out;
}

}  // namespace eqav

template <>
struct std::hash<eqav::EqRel> {
  std::size_t operator()(const eqav::EqRel& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto l : r.labels()) h = (h ^ l) * 1099511628211ull;
    return h;
  }
};
