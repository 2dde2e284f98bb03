#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance suites.
// Oracles here deliberately avoid the library routine they are used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posets/posets.hpp"

namespace posets::testing {

inline Poset chain(std::size_t n) {
  std::vector<Label> elems;
  std::vector<std::pair<Label, Label>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back("c" + std::to_string(i));
    if (i) rel.emplace_back(elems[i - 1], elems[i]);
  }
  return Poset::from_relations(elems, rel);
}

inline Poset antichain(std::size_t n) {
  std::vector<Label> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back("a" + std::to_string(i));
  return Poset::from_relations(elems, {});
}

/// 0 < a, b < 1
inline Poset diamond() {
  return Poset::from_relations({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

/// Subsets of {0..n-1} under inclusion, labeled by bitstrings.
inline Poset boolean_lattice(std::size_t n) {
  std::vector<std::uint32_t> sets(std::size_t{1} << n);
  std::iota(sets.begin(), sets.end(), 0u);
  return Poset::from_predicate(
      sets,
      [n](std::uint32_t s) {
        std::string bits;
        for (std::size_t i = 0; i < n; ++i) bits += (s >> i & 1u) ? '1' : '0';
        return bits;
      },
      [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; });
}

/// Random poset: closure of a random DAG on n elements with edge probability p.
inline Poset random_poset(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<Label> elems;
  std::vector<std::pair<Label, Label>> rel;
  for (std::size_t i = 0; i < n; ++i) elems.push_back("p" + std::string(i < 10 ? "0" : "") + std::to_string(i));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);  // so label order is not a linear extension
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(elems[perm[i]], elems[perm[j]]);
  return Poset::from_relations(elems, rel);
}

/// One representative per isomorphism class of posets on n elements (n ≤ 5).
inline std::vector<Poset> canonical_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  auto rel_of = [&](std::uint32_t mask, std::size_t i, std::size_t j) {
    if (i == j) return true;
    auto it = std::find(slots.begin(), slots.end(), std::pair{i, j});
    return (mask >> (it - slots.begin()) & 1u) != 0;
  };
  std::vector<std::size_t> perm(n);
  std::set<std::uint32_t> seen_canonical;
  std::vector<Poset> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && rel_of(mask, i, j) && rel_of(mask, j, i)) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (rel_of(mask, i, j) && rel_of(mask, j, k) && !rel_of(mask, i, k)) ok = false;
      }
    if (!ok) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (rel_of(mask, slots[s].first, slots[s].second)) {
          auto it = std::find(slots.begin(), slots.end(), std::pair{perm[slots[s].first], perm[slots[s].second]});
          image |= 1u << (it - slots.begin());
        }
      best = std::min(best, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen_canonical.insert(best).second) continue;
    std::vector<Label> elems;
    std::vector<std::pair<Label, Label>> rel;
    for (std::size_t i = 0; i < n; ++i) elems.push_back("e" + std::to_string(i));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (best >> s & 1u) rel.emplace_back(elems[slots[s].first], elems[slots[s].second]);
    out.push_back(Poset::from_relations(elems, rel));
  }
  return out;
}

/// Largest antichain by checking every subset (n ≤ ~16).
inline std::size_t brute_force_width(const Poset& p) {
  std::size_t best = 0;
  const std::size_t n = p.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool anti = true;
    for (std::size_t i = 0; i < n && anti; ++i)
      for (std::size_t j = i + 1; j < n && anti; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && p.comparable(i, j)) anti = false;
    if (anti) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

/// Every lcm of a subset of generators, by enumerating all 2^g subsets.
inline std::set<Monomial> subset_lcms(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  std::set<Monomial> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << gens.size()); ++mask) {
    Monomial m{std::vector<Exponent>(ideal.variables().size(), 0)};
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (mask >> g & 1u)
        for (std::size_t v = 0; v < m.arity(); ++v)
          m.exponents[v] = std::max(m.exponents[v], gens[g].exponents[v]);
    out.insert(m);
  }
  return out;
}

inline bool in_ideal(const MonomialIdeal& ideal, const Monomial& m) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(), [&](const Monomial& g) {
    for (std::size_t v = 0; v < m.arity(); ++v)
      if (g.exponents[v] > m.exponents[v]) return false;
    return true;
  });
}

/// Betti numbers [β_0, β_1, ...] of R/M from the upper Koszul simplicial complexes
/// K^b = {F ⊆ supp b : b - F ∈ M}, with β_{i,b}(R/M) = dim H̃_{i-2}(K^b).
/// Independent of the lcm-lattice construction.
inline std::vector<std::size_t> koszul_betti(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.variables().size();
  Monomial top{std::vector<Exponent>(n, 0)};
  for (const auto& g : ideal.generators())
    for (std::size_t v = 0; v < n; ++v) top.exponents[v] = std::max(top.exponents[v], g.exponents[v]);
  std::vector<std::size_t> beta{1};
  std::vector<Label> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back(ideal.variables()[v]);

  Monomial b{std::vector<Exponent>(n, 0)};
  auto visit = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      if (b.is_one()) return;
      std::vector<Face> faces;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Monomial shifted = b;
        Face f;
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (mask >> k & 1u) {
            if (shifted.exponents[k] == 0) ok = false;
            else {
              --shifted.exponents[k];
              f.push_back(k);
            }
          }
        if (ok && in_ideal(ideal, shifted)) faces.push_back(f);
      }
      if (faces.empty()) return;  // void complex: b ∉ M
      const auto h = all_reduced_betti(SimplicialComplex::from_facets(vertices, faces));
      for (std::size_t idx = 0; idx < h.size(); ++idx) {
        if (!h[idx]) continue;
        if (beta.size() < idx + 2) beta.resize(idx + 2, 0);
        beta[idx + 1] += h[idx];
      }
      return;
    }
    for (Exponent e = 0; e <= top.exponents[v]; ++e) {
      b.exponents[v] = e;
      self(self, v + 1);
    }
    b.exponents[v] = 0;
  };
  visit(visit, 0);
  return beta;
}

/// Number of regions of a line arrangement in the plane, by sign vectors.
///
/// Every region of a nonempty line arrangement has an edge on its boundary.
/// For each edge we take a point in its relative interior and step off the
/// line by an exact ε small enough not to cross any other line.
inline std::size_t sign_vector_regions(const Arrangement& a) {
  if (a.ambient_dim() != 2) throw DomainError("sign-vector oracle handles the plane only");
  const auto& hs = a.hyperplanes();
  if (hs.empty()) return 1;
  auto eval = [](const Hyperplane& h, const Rational& x, const Rational& y) {
    return h.normal[0] * x + h.normal[1] * y + h.constant;
  };
  auto abs = [](const Rational& q) { return q < 0 ? Rational(-q) : q; };
  std::set<std::vector<int>> signs;
  for (std::size_t l = 0; l < hs.size(); ++l) {
    const auto& L = hs[l];
    const Rational& a0 = L.normal[0];
    const Rational& b0 = L.normal[1];
    Rational px = a0 != 0 ? Rational(-L.constant / a0) : Rational(0);
    Rational py = a0 != 0 ? Rational(0) : Rational(-L.constant / b0);
    const Rational dx = -b0, dy = a0;  // direction along L
    std::vector<Rational> ts;
    for (std::size_t m = 0; m < hs.size(); ++m) {
      if (m == l) continue;
      const Rational slope = hs[m].normal[0] * dx + hs[m].normal[1] * dy;
      if (slope == 0) continue;  // parallel
      ts.push_back(-eval(hs[m], px, py) / slope);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rational> samples;
    if (ts.empty()) {
      samples.push_back(0);
    } else {
      samples.push_back(ts.front() - 1);
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) samples.push_back((ts[k] + ts[k + 1]) / 2);
      samples.push_back(ts.back() + 1);
    }
    for (const auto& t : samples) {
      const Rational sx = px + t * dx, sy = py + t * dy;
      Rational eps = 1;
      for (std::size_t m = 0; m < hs.size(); ++m) {
        if (m == l) continue;
        const Rational dot = hs[m].normal[0] * a0 + hs[m].normal[1] * b0;
        const Rational bound = abs(eval(hs[m], sx, sy)) / (2 * (abs(dot) + 1));
        eps = std::min(eps, bound);
      }
      for (int side : {-1, 1}) {
        const Rational qx = sx + side * eps * a0, qy = sy + side * eps * b0;
        std::vector<int> sv;
        for (const auto& h : hs) {
          const Rational v = eval(h, qx, qy);
          if (v == 0) throw InvariantViolation("oracle sample landed on a line");
          sv.push_back(v > 0 ? 1 : -1);
        }
        signs.insert(std::move(sv));
      }
    }
  }
  return signs.size();
}

/// Random arrangement with small rational coefficients; proportional duplicates skipped.
inline Arrangement random_arrangement(std::mt19937& rng, std::size_t dim, std::size_t count) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<Hyperplane> hs;
  std::vector<Hyperplane> normalized;
  while (hs.size() < count) {
    Hyperplane h;
    for (std::size_t i = 0; i < dim; ++i) h.normal.push_back(Rational(num(rng), den(rng)));
    h.constant = Rational(num(rng), den(rng));
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& q) { return q == 0; })) continue;
    auto n = h.normalized();
    if (std::find(normalized.begin(), normalized.end(), n) != normalized.end()) continue;
    normalized.push_back(n);
    hs.push_back(std::move(h));
  }
  return Arrangement(dim, std::move(hs));
}

inline Arrangement four_lines() {
  auto h = [](int a, int b, int c) { return Hyperplane{{Rational(a), Rational(b)}, Rational(c)}; };
  return Arrangement(2, {h(1, 1, 0), h(1, 0, 0), h(1, -1, 0), h(0, 1, 1)});
}

inline MonomialIdeal five_generator_ideal() {
  return MonomialIdeal({"a", "b", "c", "d"},
                       {Monomial{{3, 2, 1, 0}}, Monomial{{3, 2, 0, 1}}, Monomial{{2, 0, 1, 1}},
                        Monomial{{1, 1, 2, 1}}, Monomial{{0, 2, 2, 1}}});
}

/// Integer zeta matrix times Möbius matrix; returns true iff it is the identity.
inline bool zeta_moebius_inverse(const Poset& p) {
  const MoebiusTable mu(p);
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += (p.leq(i, k) ? 1 : 0) * mu(k, j);
      if (s != (i == j ? 1 : 0)) return false;
    }
  return true;
}

inline bool moebius_row_sums_vanish(const Poset& p) {
  const MoebiusTable mu(p);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.less(a, b)) continue;
      std::int64_t s = 0;
      for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(a, z) && p.leq(z, b)) s += mu(a, z);
      if (s != 0) return false;
    }
  return true;
}

/// ∂∘∂ = 0 and Σ(-1)^i dim H̃_i equals the reduced Euler characteristic.
inline bool chain_complex_consistent(const SimplicialComplex& k) {
  const auto cc = chain_complex(k);  // verifies ∂∘∂ = 0 itself, throwing on failure
  for (std::size_t d = 1; d < cc.boundaries.size(); ++d)
    if (!(cc.boundaries[d - 1] * cc.boundaries[d]).is_zero()) return false;
  const auto h = all_reduced_betti(k);
  std::int64_t alt = 0;
  for (std::size_t idx = 0; idx < h.size(); ++idx)
    alt += (idx % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(h[idx]);
  return alt == reduced_euler_characteristic(k);
}

/// β_{i+1}(R/H_P) from the cover-count formula, and from lcm-lattice homology.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> hibi_routes(const Poset& p) {
  const auto covers = hibi_betti(cover_statistics(distributive_lattice(p)));
  std::vector<std::size_t> by_covers(covers.begin(), covers.end());
  auto homology = betti_numbers(hibi_ideal(p));
  std::vector<std::size_t> by_homology(homology.begin() + 1, homology.end());
  while (!by_covers.empty() && by_covers.back() == 0) by_covers.pop_back();
  while (!by_homology.empty() && by_homology.back() == 0) by_homology.pop_back();
  return {by_covers, by_homology};
}

}  // namespace posets::testing
