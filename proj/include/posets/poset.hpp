#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posets/errors.hpp"

namespace posets {

using Label = std::string;

namespace detail {

/// Square boolean matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  /// row i |= row k
  void or_row(std::size_t i, std::size_t k) {
    for (std::size_t w = 0; w < words_; ++w) bits_[i * words_ + w] |= bits_[k * words_ + w];
  }

  /// Every bit of row `sub` is also set in row `super`.
  bool row_subset(std::size_t sub, std::size_t super) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (bits_[sub * words_ + w] & ~bits_[super * words_ + w]) return false;
    return true;
  }

  /// Row i of this matrix shares no bit with row j of `other`.
  bool rows_disjoint(std::size_t i, const BitMatrix& other, std::size_t j) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (bits_[i * words_ + w] & other.bits_[j * other.words_ + w]) return false;
    return true;
  }

  /// Warshall's algorithm.
  void close_transitively() {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (test(i, k)) or_row(i, k);
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

struct CoverRelation {
  Label lower;
  Label upper;
  friend bool operator==(const CoverRelation&, const CoverRelation&) = default;
};

/// A finite partially ordered set over string labels.
///
/// Elements are kept sorted by label, so index order is the lexicographic
/// label order and is reproducible across runs. Instances are immutable once
/// built and every constructor verifies the partial-order axioms.
class Poset {
 public:
  /// The empty poset.
  Poset() = default;

  /// Reflexive-transitive closure of `pairs` (a, b), read as a ⪯ b.
  static Poset from_relations(std::vector<Label> elements,
                              const std::vector<std::pair<Label, Label>>& pairs) {
    Poset p(std::move(elements));
    for (const auto& [a, b] : pairs) p.leq_.set(p.index_of(a), p.index_of(b));
    p.leq_.close_transitively();
    p.check_antisymmetric();
    return p;
  }

  /// Builds the poset whose relation is `leq(x, y)` on the given elements.
  /// The predicate must already be a partial order; this is verified.
  template <typename T, typename LabelFn, typename LeqFn>
  static Poset from_predicate(const std::vector<T>& items, LabelFn&& label_of, LeqFn&& leq) {
    std::vector<Label> labels;
    labels.reserve(items.size());
    for (const auto& item : items) labels.push_back(label_of(item));
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    Poset p(labels);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j)
        if (i == j || leq(items[order[i]], items[order[j]])) p.leq_.set(i, j);
    p.check_partial_order();
    return p;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<Label>& elements() const noexcept { return labels_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(const Label& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t index_of(const Label& label) const {
    if (auto i = find(label)) return *i;
    throw UnknownElement(label);
  }

  bool contains(const Label& label) const { return find(label).has_value(); }

  bool leq(std::size_t i, std::size_t j) const { return leq_.test(i, j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_.test(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  /// Indices in an order compatible with ⪯ (a linear extension).
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> below(size(), 0), order(size());
    for (std::size_t i = 0; i < size(); ++i) {
      order[i] = i;
      for (std::size_t j = 0; j < size(); ++j) below[i] += leq(j, i);
    }
    // x ≺ y implies the down-set of x is strictly smaller than that of y.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return order;
  }

  /// Same elements and same relation.
  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  explicit Poset(std::vector<Label> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 1; i < labels_.size(); ++i)
      if (labels_[i] == labels_[i - 1]) throw DuplicateLabel(labels_[i]);
    leq_ = detail::BitMatrix(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) leq_.set(i, i);
  }

  void check_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (leq(i, j) && leq(j, i))
          throw CycleError("relations contain a cycle through '" + labels_[i] + "' and '" +
                           labels_[j] + "'");
  }

  void check_partial_order() const {
    check_antisymmetric();
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(i, j) && !leq_.row_subset(j, i))
          throw InvariantViolation("predicate is not transitive at '" + labels_[i] + "'");
  }

  std::vector<Label> labels_;
  detail::BitMatrix leq_;

  friend Poset induced(const Poset&, const std::vector<std::size_t>&);
  friend Poset dual(const Poset&);
};

/// Induced subposet on the given element indices.
inline Poset induced(const Poset& p, const std::vector<std::size_t>& keep) {
  std::vector<Label> labels;
  labels.reserve(keep.size());
  for (auto i : keep) labels.push_back(p.label(i));
  Poset out(labels);
  // Labels of a subset of a sorted list keep their relative order once sorted.
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b)
      if (p.leq(sorted[a], sorted[b])) out.leq_.set(a, b);
  return out;
}

inline Poset subposet(const Poset& p, const std::vector<Label>& subset) {
  std::vector<std::size_t> keep;
  for (const auto& label : subset) keep.push_back(p.index_of(label));
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return induced(p, keep);
}

/// The same elements under the reversed order.
inline Poset dual(const Poset& p) {
  Poset out(p.labels_);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) out.leq_.set(j, i);
  return out;
}

inline bool is_leq(const Poset& p, const Label& a, const Label& b) {
  return p.leq(p.index_of(a), p.index_of(b));
}

/// Covering pairs (i, j) as indices, sorted lexicographically.
inline std::vector<std::pair<std::size_t, std::size_t>> cover_indices(const Poset& p) {
  const std::size_t n = p.size();
  detail::BitMatrix above(n), below(n);  // strict up-sets and down-sets
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(i, j)) {
        above.set(i, j);
        below.set(j, i);
      }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(i, j) && above.rows_disjoint(i, below, j)) out.emplace_back(i, j);
  return out;
}

/// The transitive reduction (Hasse diagram edges).
inline std::vector<CoverRelation> covering_relations(const Poset& p) {
  std::vector<CoverRelation> out;
  for (auto [i, j] : cover_indices(p)) out.push_back({p.label(i), p.label(j)});
  return out;
}

namespace detail {
inline Poset interval(const Poset& p, const Label& a, const Label& b, bool closed) {
  const std::size_t ia = p.index_of(a), ib = p.index_of(b);
  if (ia == ib || !p.leq(ia, ib))
    throw NotComparable("'" + a + "' is not strictly below '" + b + "'");
  std::vector<std::size_t> keep;
  for (std::size_t z = 0; z < p.size(); ++z) {
    const bool inside = closed ? (p.leq(ia, z) && p.leq(z, ib)) : (p.less(ia, z) && p.less(z, ib));
    if (inside) keep.push_back(z);
  }
  return induced(p, keep);
}
}  // namespace detail

/// Elements strictly between a and b. Requires a ≺ b.
inline Poset open_interval(const Poset& p, const Label& a, const Label& b) {
  return detail::interval(p, a, b, false);
}

/// Elements z with a ⪯ z ⪯ b. Requires a ≺ b.
inline Poset closed_interval(const Poset& p, const Label& a, const Label& b) {
  return detail::interval(p, a, b, true);
}

inline std::vector<Label> minimal_elements(const Poset& p) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < p.size() && minimal; ++j) minimal = !p.less(j, i);
    if (minimal) out.push_back(p.label(i));
  }
  return out;
}

inline std::vector<Label> maximal_elements(const Poset& p) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < p.size() && maximal; ++j) maximal = !p.less(i, j);
    if (maximal) out.push_back(p.label(i));
  }
  return out;
}

/// heights[i] = length of the longest chain ending at element i.
inline std::vector<std::size_t> element_heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  for (auto x : p.linear_extension())
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(y, x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

/// Elements grouped by height; block k holds the height-k elements in label order.
inline std::vector<std::vector<Label>> rank_partition(const Poset& p) {
  const auto h = element_heights(p);
  std::vector<std::vector<Label>> blocks;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (h[i] >= blocks.size()) blocks.resize(h[i] + 1);
    blocks[h[i]].push_back(p.label(i));
  }
  return blocks;
}

inline std::size_t height(const Poset& p) {
  if (p.empty()) throw EmptyPoset();
  const auto h = element_heights(p);
  return *std::max_element(h.begin(), h.end());
}

namespace detail {

/// Hopcroft-Karp maximum matching on a bipartite graph with `n` vertices per side.
inline std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_left(n, kFree), match_right(n, kFree), dist(n);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < n; ++u) {
      dist[u] = match_left[u] == kFree ? 0 : kInf;
      if (dist[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        auto w = match_right[v];
        if (w == kFree) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (auto v : adj[u]) {
      auto w = match_right[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  std::size_t matching = 0;
  while (bfs())
    for (std::size_t u = 0; u < n; ++u)
      if (match_left[u] == kFree && dfs(dfs, u)) ++matching;
  return matching;
}

}  // namespace detail

/// Size of a largest antichain, via Dilworth: |P| minus a maximum matching
/// in the strict-comparability bipartite graph (= minimum chain cover).
inline std::size_t dilworth_number(const Poset& p) {
  std::vector<std::vector<std::size_t>> adj(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.less(i, j)) adj[i].push_back(j);
  return p.size() - detail::maximum_matching(adj);
}

/// Every antichain with exactly k elements, in lexicographic index order.
inline std::vector<std::vector<Label>> antichains(const Poset& p, std::size_t k) {
  std::vector<std::vector<Label>> out;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == k) {
      std::vector<Label> labels;
      for (auto i : chosen) labels.push_back(p.label(i));
      out.push_back(std::move(labels));
      return;
    }
    for (std::size_t i = start; i + (k - chosen.size()) <= p.size(); ++i) {
      bool free = std::none_of(chosen.begin(), chosen.end(),
                               [&](std::size_t c) { return p.comparable(c, i); });
      if (!free) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace posets
