#pragma once

// Affine hyperplane arrangements over the rationals and their intersection
// semilattices, with the Möbius-function region and Betti counts.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posets/errors.hpp"
#include "posets/linalg.hpp"
#include "posets/order.hpp"
#include "posets/poset.hpp"

namespace posets {

/// The zero set of normal · x + constant.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational constant;

  std::size_t dimension() const noexcept { return normal.size(); }

  /// Scaled so the first nonzero normal coordinate is 1.
  Hyperplane normalized() const {
    auto lead = std::find_if(normal.begin(), normal.end(), [](const Rational& q) { return q != 0; });
    if (lead == normal.end()) throw DomainError("hyperplane with zero normal vector");
    const Rational scale = 1 / *lead;
    Hyperplane out{normal, constant * scale};
    for (auto& q : out.normal) q *= scale;
    return out;
  }

  /// Coefficients followed by the constant.
  std::vector<Rational> augmented_row() const {
    std::vector<Rational> row = normal;
    row.push_back(constant);
    return row;
  }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class Arrangement {
 public:
  Arrangement() = default;

  /// Rejects zero normals, wrong lengths, and proportional duplicates.
  Arrangement(std::size_t ambient_dim, std::vector<Hyperplane> hyperplanes)
      : ambient_dim_(ambient_dim) {
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      if (hyperplanes[i].dimension() != ambient_dim)
        throw ShapeMismatch("hyperplane " + std::to_string(i + 1) + " has " +
                            std::to_string(hyperplanes[i].dimension()) + " coefficients, expected " +
                            std::to_string(ambient_dim));
      Hyperplane h = hyperplanes[i].normalized();
      for (std::size_t j = 0; j < hyperplanes_.size(); ++j)
        if (hyperplanes_[j] == h)
          throw DuplicateHyperplane("hyperplanes " + std::to_string(j + 1) + " and " +
                                    std::to_string(i + 1) + " coincide");
      hyperplanes_.push_back(std::move(h));
    }
  }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

/// A nonempty affine subspace, stored as the RREF of its defining system.
struct Flat {
  RationalMatrix system;  // codim rows, ambient_dim + 1 columns
  std::size_t codim = 0;
  std::string label;

  std::size_t ambient_dim() const noexcept { return system.cols() - 1; }
  friend bool operator==(const Flat& a, const Flat& b) { return a.label == b.label; }
};

namespace detail {

/// Canonical flat cut out by the rows of [normals | constants], if nonempty.
inline std::optional<Flat> solve_flat(const RationalMatrix& augmented) {
  const std::size_t n = augmented.cols() - 1;
  auto reduced = rref(augmented);
  if (!reduced.pivots.empty() && reduced.pivots.back() == n) return std::nullopt;
  RationalMatrix system(reduced.rank, augmented.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r)
    for (std::size_t c = 0; c < augmented.cols(); ++c) system(r, c) = reduced.matrix(r, c);
  Flat f{std::move(system), reduced.rank, {}};
  f.label = f.system.fingerprint();
  return f;
}

inline RationalMatrix stack(const Flat& f, const Hyperplane& h) {
  return f.system.vstack(RationalMatrix::from_rows({h.augmented_row()}, f.system.cols()));
}

}  // namespace detail

/// The whole space: no equations, codimension 0.
inline Flat ambient_flat(std::size_t dim) {
  return *detail::solve_flat(RationalMatrix(0, dim + 1));
}

/// ⋂_{i ∈ S} H_i, or nothing if the hyperplanes do not meet. S = ∅ gives the ambient space.
inline std::optional<Flat> flat_of(const Arrangement& a, const std::vector<std::size_t>& subset) {
  std::vector<std::vector<Rational>> rows;
  for (auto i : subset) {
    if (i >= a.size())
      throw IndexOutOfRange("hyperplane index " + std::to_string(i) + " out of range");
    rows.push_back(a.hyperplanes()[i].augmented_row());
  }
  return detail::solve_flat(RationalMatrix::from_rows(rows, a.ambient_dim() + 1));
}

/// F ⪯ G in the intersection semilattice, i.e. G ⊆ F.
inline bool flat_leq(const Flat& f, const Flat& g) {
  if (f.system.cols() != g.system.cols()) throw ShapeMismatch("flats in different ambient spaces");
  if (f.codim > g.codim) return false;
  return rank(g.system.vstack(f.system)) == g.codim;
}

/// Every distinct nonempty intersection, found by intersecting known flats
/// with single hyperplanes until nothing new appears. Sorted by label.
inline std::vector<Flat> flats(const Arrangement& a) {
  std::vector<Flat> found{ambient_flat(a.ambient_dim())};
  std::map<std::string, std::size_t> index{{found.front().label, 0}};
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& h : a.hyperplanes()) {
      auto g = detail::solve_flat(detail::stack(found[k], h));
      if (!g || index.count(g->label)) continue;
      index.emplace(g->label, found.size());
      found.push_back(std::move(*g));
    }
  std::sort(found.begin(), found.end(),
            [](const Flat& x, const Flat& y) { return x.label < y.label; });
  return found;
}

/// Flats ordered by reverse inclusion, labeled by their canonical fingerprints.
inline Poset intersection_lattice(const std::vector<Flat>& all) {
  return Poset::from_predicate(
      all, [](const Flat& f) { return f.label; }, [](const Flat& f, const Flat& g) { return flat_leq(f, g); });
}

inline Poset intersection_lattice(const Arrangement& a) { return intersection_lattice(flats(a)); }

/// The hyperplanes have a common point. Vacuously true with no hyperplanes.
inline bool is_central(const Arrangement& a) {
  std::vector<std::size_t> all(a.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return flat_of(a, all).has_value();
}

/// Dimension of the span of the normals.
inline std::size_t rank(const Arrangement& a) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.normal);
  return rank(RationalMatrix::from_rows(rows, a.ambient_dim()));
}

namespace detail {
struct LatticeData {
  std::vector<Flat> flats;  // in poset index order
  Poset poset;
  std::size_t bottom = 0;
};

inline LatticeData lattice_data(const Arrangement& a) {
  LatticeData d{flats(a), {}, 0};
  d.poset = intersection_lattice(d.flats);
  d.bottom = d.poset.index_of(ambient_flat(a.ambient_dim()).label);
  return d;
}
}  // namespace detail

/// β_i = Σ_{codim x = i} |μ(0̂, x)| for i = 0 .. max codimension.
inline std::vector<std::uint64_t> complement_betti(const Arrangement& a) {
  const auto d = detail::lattice_data(a);
  const MoebiusTable mu(d.poset);
  std::vector<std::uint64_t> beta;
  for (std::size_t x = 0; x < d.flats.size(); ++x) {
    const std::size_t c = d.flats[x].codim;
    if (beta.size() <= c) beta.resize(c + 1, 0);
    beta[c] += static_cast<std::uint64_t>(std::llabs(mu(d.bottom, x)));
  }
  return beta;
}

/// Number of regions of the real complement, Σ_x |μ(0̂, x)|.
inline std::uint64_t real_regions(const Arrangement& a) {
  std::uint64_t total = 0;
  for (auto b : complement_betti(a)) total += b;
  return total;
}

/// |μ(0̂, 1̂)| after adjoining a global maximum 1̂ to the intersection semilattice.
/// For non-essential arrangements this counts relatively bounded regions.
inline std::uint64_t bounded_regions(const Arrangement& a) {
  const auto d = detail::lattice_data(a);
  // Flat labels start with '[', so this name cannot clash.
  const Label top = "top";
  const Poset augmented = adjoin_max(d.poset, top);
  return static_cast<std::uint64_t>(
      std::llabs(moebius(augmented, d.poset.label(d.bottom), top)));
}

/// Human-readable equations of a flat, e.g. "{x = 0, y = -1}"; "{}" for the ambient space.
inline std::string describe(const Flat& f, const std::vector<std::string>& names) {
  const std::size_t n = f.ambient_dim();
  if (names.size() != n) throw ShapeMismatch("variable names do not match the ambient dimension");
  std::string out = "{";
  for (std::size_t r = 0; r < f.system.rows(); ++r) {
    if (r) out += ", ";
    std::string lhs;
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& q = f.system(r, c);
      if (q == 0) continue;
      const Rational mag = q < 0 ? Rational(-q) : q;
      if (lhs.empty()) lhs += q < 0 ? "-" : "";
      else lhs += q < 0 ? " - " : " + ";
      if (mag != 1) lhs += to_string(mag) + "*";
      lhs += names[c];
    }
    out += lhs + " = " + to_string(Rational(-f.system(r, n)));
  }
  return out + "}";
}

/// x, y, z for up to three coordinates, otherwise x1 .. xn.
inline std::vector<std::string> default_coordinate_names(std::size_t n) {
  static const char* const kShort[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 3 ? kShort[i] : "x" + std::to_string(i + 1));
  return out;
}

}  // namespace posets
