#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posets/errors.hpp"
#include "posets/homology.hpp"
#include "posets/order.hpp"
#include "posets/poset.hpp"

namespace posets {

using Exponent = std::uint32_t;

/// Exponent vector over an ambient list of variables (held by the ideal).
struct Monomial {
  std::vector<Exponent> exponents;

  std::size_t arity() const noexcept { return exponents.size(); }
  bool is_one() const {
    return std::all_of(exponents.begin(), exponents.end(), [](Exponent e) { return e == 0; });
  }

  /// Total degree; throws OverflowError past 64 bits.
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exponents) {
      if (d > std::numeric_limits<std::uint64_t>::max() - e)
        throw OverflowError("monomial degree overflows");
      d += e;
    }
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

namespace detail {
inline void check_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw VariableMismatch("monomials over " + std::to_string(a.arity()) + " and " +
                           std::to_string(b.arity()) + " variables");
}
}  // namespace detail

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::check_same_arity(a, b);
  Monomial out{a.exponents};
  for (std::size_t i = 0; i < out.arity(); ++i)
    out.exponents[i] = std::max(out.exponents[i], b.exponents[i]);
  return out;
}

/// a | b
inline bool divides(const Monomial& a, const Monomial& b) {
  detail::check_same_arity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  return true;
}

/// Canonical "a^3*b^2*c" form; "1" for the constant monomial.
inline std::string to_string(const Monomial& m, const std::vector<std::string>& variables) {
  if (m.arity() != variables.size())
    throw VariableMismatch("monomial arity does not match the variable list");
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[i];
    if (m.exponents[i] != 1) out += '^' + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

/// A monomial ideal stored by its minimal generators, sorted by exponent vector.
class MonomialIdeal {
 public:
  MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
      : variables_(std::move(variables)) {
    for (const auto& g : generators)
      if (g.arity() != variables_.size())
        throw VariableMismatch("generator arity does not match the variable list");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const auto& g : generators) {
      bool redundant = std::any_of(generators.begin(), generators.end(),
                                   [&](const Monomial& h) { return h != g && divides(h, g); });
      if (!redundant) generators_.push_back(g);
    }
  }

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }

  std::string to_string(const Monomial& m) const { return posets::to_string(m, variables_); }

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

/// Drops every generator divisible by another one.
inline MonomialIdeal minimalize(std::vector<std::string> variables, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(variables), std::move(gens));
}

/// Lcm-lattice with each poset label mapped back to its monomial.
struct LcmLattice {
  std::vector<std::string> variables;
  Poset poset;
  std::map<Label, Monomial> monomials;
  Label bottom;
  Label top;

  const Monomial& monomial(const Label& label) const {
    auto it = monomials.find(label);
    if (it == monomials.end()) throw NotInLattice(label);
    return it->second;
  }
};

/// All lcms of subsets of the generators (the empty subset giving 1), under divisibility.
inline LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) throw DomainError("lcm-lattice of the zero ideal");
  const auto& gens = ideal.generators();
  std::vector<Monomial> elements{Monomial{std::vector<Exponent>(ideal.variables().size(), 0)}};
  std::set<Monomial> seen{elements.front()};
  // Saturate under lcm with each generator; every subset lcm is reached this way.
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& g : gens) {
      Monomial m = lcm(elements[k], g);
      if (seen.insert(m).second) elements.push_back(std::move(m));
    }

  LcmLattice out;
  out.variables = ideal.variables();
  out.poset = Poset::from_predicate(
      elements, [&](const Monomial& m) { return ideal.to_string(m); },
      [](const Monomial& a, const Monomial& b) { return divides(a, b); });
  Monomial top = elements.front();
  for (const auto& m : elements) {
    out.monomials.emplace(ideal.to_string(m), m);
    top = lcm(top, m);
  }
  out.bottom = ideal.to_string(elements.front());
  out.top = ideal.to_string(top);
  return out;
}

/// Divisors of n under divisibility, labeled in decimal.
inline Poset divisor_poset(std::uint64_t n) {
  if (n == 0) throw DomainError("divisor_poset needs a positive integer");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divisors.push_back(d);
      if (d != n / d) divisors.push_back(n / d);
    }
  return Poset::from_predicate(
      divisors, [](std::uint64_t d) { return std::to_string(d); },
      [](std::uint64_t a, std::uint64_t b) { return b % a == 0; });
}

/// Generators u_I = Π_{p_i ∈ I} x_i · Π_{p_i ∉ I} y_i, one per order ideal I,
/// over variables x0..x{n-1}, y0..y{n-1} following P's element order.
inline MonomialIdeal hibi_ideal(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::string> variables;
  for (std::size_t i = 0; i < n; ++i) variables.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) variables.push_back("y" + std::to_string(i));
  std::vector<Monomial> gens;
  for (const auto& ideal : order_ideals(p)) {
    Monomial u{std::vector<Exponent>(2 * n, 0)};
    for (std::size_t i = 0; i < n; ++i) u.exponents[ideal.bits[i] == '1' ? i : n + i] = 1;
    gens.push_back(std::move(u));
  }
  return MonomialIdeal(std::move(variables), std::move(gens));
}

namespace detail {
/// Reduced Betti numbers of Δ(1, b), indexed from -1.
inline std::vector<std::size_t> interval_homology(const LcmLattice& lattice, const Label& b) {
  return all_reduced_betti(order_complex(open_interval(lattice.poset, lattice.bottom, b)));
}

inline void check_betti_index(int i) {
  if (i < 1) throw DomainError("Betti index must be at least 1");
}
}  // namespace detail

/// β_{i,b}(R/M) = dim H̃_{i-2}(Δ(1, b)) over the rationals.
inline std::size_t multigraded_betti(const LcmLattice& lattice, const Monomial& b, int i) {
  detail::check_betti_index(i);
  const Label label = to_string(b, lattice.variables);
  if (!lattice.poset.contains(label)) throw NotInLattice(label);
  if (label == lattice.bottom) return 0;
  const auto h = detail::interval_homology(lattice, label);
  const auto idx = static_cast<std::size_t>(i - 1);  // H̃_{i-2} sits at index i-1
  return idx < h.size() ? h[idx] : 0;
}

/// β_{i,b}(R/M) for i = 1 .. dim Δ(1, b) + 2; empty for b = 1.
inline std::vector<std::size_t> multigraded_betti_row(const LcmLattice& lattice, const Monomial& b) {
  const Label label = to_string(b, lattice.variables);
  if (!lattice.poset.contains(label)) throw NotInLattice(label);
  if (label == lattice.bottom) return {};
  return detail::interval_homology(lattice, label);
}

inline std::size_t multigraded_betti(const MonomialIdeal& ideal, const Monomial& b, int i) {
  return multigraded_betti(lcm_lattice(ideal), b, i);
}

/// [β_0, β_1, ...] of R/M, with β_0 = 1 and trailing zeros dropped.
inline std::vector<std::size_t> betti_numbers(const LcmLattice& lattice) {
  std::vector<std::size_t> beta{1};
  for (const auto& b : lattice.poset.elements()) {
    if (b == lattice.bottom) continue;
    const auto h = detail::interval_homology(lattice, b);
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      if (h[idx] == 0) continue;
      if (beta.size() < idx + 2) beta.resize(idx + 2, 0);
      beta[idx + 1] += h[idx];
    }
  }
  return beta;
}

inline std::vector<std::size_t> betti_numbers(const MonomialIdeal& ideal) {
  return betti_numbers(lcm_lattice(ideal));
}

/// β_i(R/M) = Σ_{b ≠ 1} β_{i,b}(R/M).
inline std::size_t total_betti(const MonomialIdeal& ideal, int i) {
  detail::check_betti_index(i);
  const auto beta = betti_numbers(ideal);
  const auto idx = static_cast<std::size_t>(i);
  return idx < beta.size() ? beta[idx] : 0;
}

}  // namespace posets
