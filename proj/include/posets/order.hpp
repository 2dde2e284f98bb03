#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posets/errors.hpp"
#include "posets/poset.hpp"

namespace posets {

namespace detail {

/// μ(a, ·) for every element, 0 where a ⋠ x.
inline std::vector<std::int64_t> moebius_row(const Poset& p, std::size_t a,
                                             const std::vector<std::size_t>& extension) {
  std::vector<std::int64_t> row(p.size(), 0);
  for (auto b : extension) {
    if (!p.leq(a, b)) continue;
    if (b == a) {
      row[b] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (auto z : extension) {
      if (z == b) break;
      if (p.leq(a, z) && p.leq(z, b)) sum += row[z];
    }
    row[b] = -sum;
  }
  return row;
}

}  // namespace detail

/// μ(a, b) for every comparable pair a ⪯ b.
class MoebiusTable {
 public:
  explicit MoebiusTable(const Poset& p) : poset_(p), values_(p.size() * p.size(), 0) {
    const auto extension = p.linear_extension();
    for (std::size_t a = 0; a < p.size(); ++a) {
      auto row = detail::moebius_row(p, a, extension);
      std::copy(row.begin(), row.end(), values_.begin() + a * p.size());
    }
  }

  const Poset& poset() const noexcept { return poset_; }

  /// Index form; 0 when a ⋠ b.
  std::int64_t operator()(std::size_t a, std::size_t b) const {
    return values_[a * poset_.size() + b];
  }

  std::int64_t at(const Label& a, const Label& b) const {
    const auto ia = poset_.index_of(a), ib = poset_.index_of(b);
    if (!poset_.leq(ia, ib)) throw NotComparable("'" + a + "' ⋠ '" + b + "'");
    return (*this)(ia, ib);
  }

  std::map<std::pair<Label, Label>, std::int64_t> entries() const {
    std::map<std::pair<Label, Label>, std::int64_t> out;
    for (std::size_t a = 0; a < poset_.size(); ++a)
      for (std::size_t b = 0; b < poset_.size(); ++b)
        if (poset_.leq(a, b)) out.emplace(std::pair{poset_.label(a), poset_.label(b)}, (*this)(a, b));
    return out;
  }

 private:
  Poset poset_;
  std::vector<std::int64_t> values_;
};

inline MoebiusTable moebius_table(const Poset& p) { return MoebiusTable(p); }

/// Single value by the defining recursion, computing only the row of `a`.
inline std::int64_t moebius(const Poset& p, const Label& a, const Label& b) {
  const auto ia = p.index_of(a), ib = p.index_of(b);
  if (!p.leq(ia, ib)) throw NotComparable("'" + a + "' ⋠ '" + b + "'");
  return detail::moebius_row(p, ia, p.linear_extension())[ib];
}

namespace detail {

/// Greatest element of {z : z ⪯ a and z ⪯ b} (or least upper bound when `upper`).
inline std::optional<std::size_t> bound(const Poset& p, std::size_t a, std::size_t b, bool upper) {
  auto rel = [&](std::size_t x, std::size_t y) { return upper ? p.leq(y, x) : p.leq(x, y); };
  std::vector<std::size_t> common;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (rel(z, a) && rel(z, b)) common.push_back(z);
  for (auto candidate : common) {
    bool dominates = true;
    for (auto z : common)
      if (!rel(z, candidate)) {
        dominates = false;
        break;
      }
    if (dominates) return candidate;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Label> meet(const Poset& p, const Label& a, const Label& b) {
  auto m = detail::bound(p, p.index_of(a), p.index_of(b), false);
  if (!m) return std::nullopt;
  return p.label(*m);
}

inline std::optional<Label> join(const Poset& p, const Label& a, const Label& b) {
  auto j = detail::bound(p, p.index_of(a), p.index_of(b), true);
  if (!j) return std::nullopt;
  return p.label(*j);
}

/// Every pair has a meet and a join.
inline bool is_lattice(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p.comparable(a, b)) continue;
      if (!detail::bound(p, a, b, false) || !detail::bound(p, a, b, true)) return false;
    }
  return true;
}

namespace detail {
inline Poset adjoin(const Poset& p, const Label& fresh, bool above) {
  if (p.contains(fresh)) throw LabelClash(fresh);
  std::vector<Label> elements = p.elements();
  elements.push_back(fresh);
  std::vector<std::pair<Label, Label>> pairs;
  for (auto [i, j] : cover_indices(p)) pairs.emplace_back(p.label(i), p.label(j));
  for (const auto& x : p.elements()) {
    if (above) pairs.emplace_back(x, fresh);
    else pairs.emplace_back(fresh, x);
  }
  return Poset::from_relations(std::move(elements), pairs);
}
}  // namespace detail

/// P with a new global maximum named `top`.
inline Poset adjoin_max(const Poset& p, const Label& top = "1hat") {
  return detail::adjoin(p, top, true);
}

/// P with a new global minimum named `bottom`.
inline Poset adjoin_min(const Poset& p, const Label& bottom = "0hat") {
  return detail::adjoin(p, bottom, false);
}

/// A down-closed subset of an ambient poset. `bits[i]` is '1' iff element i
/// (in the ambient index order) is a member.
struct OrderIdeal {
  std::string bits;
  std::vector<Label> members;
  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

/// All order ideals, including ∅ and P, sorted by characteristic bitstring.
inline std::vector<OrderIdeal> order_ideals(const Poset& p) {
  const auto extension = p.linear_extension();
  std::vector<std::string> found;
  std::string bits(p.size(), '0');
  // Decide elements along the linear extension; everything below an element
  // has already been decided when we reach it.
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == extension.size()) {
      found.push_back(bits);
      return;
    }
    const auto x = extension[k];
    self(self, k + 1);
    bool addable = true;
    for (std::size_t y = 0; y < p.size() && addable; ++y)
      if (p.less(y, x) && bits[y] == '0') addable = false;
    if (addable) {
      bits[x] = '1';
      self(self, k + 1);
      bits[x] = '0';
    }
  };
  extend(extend, 0);
  std::sort(found.begin(), found.end());

  std::vector<OrderIdeal> out;
  out.reserve(found.size());
  for (auto& b : found) {
    OrderIdeal ideal{std::move(b), {}};
    for (std::size_t i = 0; i < p.size(); ++i)
      if (ideal.bits[i] == '1') ideal.members.push_back(p.label(i));
    out.push_back(std::move(ideal));
  }
  return out;
}

/// Lattice of order ideals under inclusion, labeled by ideal bitstrings.
inline Poset distributive_lattice(const Poset& p) {
  const auto ideals = order_ideals(p);
  return Poset::from_predicate(
      ideals, [](const OrderIdeal& i) { return i.bits; },
      [](const OrderIdeal& a, const OrderIdeal& b) {
        for (std::size_t k = 0; k < a.bits.size(); ++k)
          if (a.bits[k] == '1' && b.bits[k] == '0') return false;
        return true;
      });
}

/// counts[k] = number of elements covering exactly k elements.
struct CoverTally {
  std::map<std::size_t, std::size_t> counts;
  friend bool operator==(const CoverTally&, const CoverTally&) = default;
};

/// Requires a unique minimal element, which lands in counts[0].
inline CoverTally cover_statistics(const Poset& lattice) {
  if (minimal_elements(lattice).size() != 1) throw NoBottom();
  std::vector<std::size_t> lower_covers(lattice.size(), 0);
  for (auto [lo, hi] : cover_indices(lattice)) ++lower_covers[hi];
  CoverTally tally;
  for (auto c : lower_covers) ++tally.counts[c];
  return tally;
}

/// β[i] = Σ_{j ≥ i} C(j, i) · g_j, where g_j = counts[j] (missing keys are 0).
inline std::vector<std::uint64_t> hibi_betti(const CoverTally& tally) {
  if (tally.counts.empty()) return {};
  using boost::multiprecision::cpp_int;
  const std::size_t m = tally.counts.rbegin()->first;
  std::vector<std::uint64_t> beta(m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    cpp_int sum = 0;
    for (const auto& [j, g] : tally.counts) {
      if (j < i) continue;
      cpp_int binom = 1;  // C(j, i)
      for (std::size_t t = 0; t < i; ++t) binom = binom * (j - t) / (t + 1);
      sum += binom * g;
    }
    if (sum > std::numeric_limits<std::uint64_t>::max())
      throw OverflowError("Hibi Betti number exceeds 64 bits");
    beta[i] = static_cast<std::uint64_t>(sum);
  }
  return beta;
}

}  // namespace posets
