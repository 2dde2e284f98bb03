#pragma once

// Order complexes and reduced simplicial homology over the rationals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "posets/errors.hpp"
#include "posets/linalg.hpp"
#include "posets/poset.hpp"

namespace posets {

using Face = std::vector<std::size_t>;  // sorted vertex indices

/// A finite abstract simplicial complex given by its facets.
///
/// Two degenerate complexes are kept apart: the void complex has no faces at
/// all, while the irrelevant complex {∅} has exactly the empty face.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::vector<Label> vertices = {}) {
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    return k;
  }

  static SimplicialComplex irrelevant(std::vector<Label> vertices = {}) {
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    k.facets_.push_back({});
    return k;
  }

  /// Keeps only inclusion-maximal facets. No facets at all gives the void complex.
  static SimplicialComplex from_facets(std::vector<Label> vertices, std::vector<Face> facets) {
    for (auto& f : facets) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (auto v : f)
        if (v >= vertices.size()) throw IndexOutOfRange("facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    for (const auto& f : facets) {
      bool nested = std::any_of(facets.begin(), facets.end(), [&](const Face& g) {
        return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
      });
      if (!nested) k.facets_.push_back(f);
    }
    return k;
  }

  const std::vector<Label>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }

  /// Largest face dimension; -1 for {∅}. Undefined (throws) for the void complex.
  int dimension() const {
    if (is_void()) throw VoidComplex();
    std::size_t largest = 0;
    for (const auto& f : facets_) largest = std::max(largest, f.size());
    return static_cast<int>(largest) - 1;
  }

  /// faces[d + 1] holds the d-dimensional faces in lexicographic order.
  std::vector<std::vector<Face>> faces_by_dimension() const {
    if (is_void()) throw VoidComplex();
    std::vector<std::set<Face>> sets(static_cast<std::size_t>(dimension() + 2));
    for (const auto& facet : facets_) {
      // all subsets of the facet, by bitmask
      const std::size_t n = facet.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Face f;
        for (std::size_t b = 0; b < n; ++b)
          if (mask >> b & 1u) f.push_back(facet[b]);
        sets[f.size()].insert(std::move(f));
      }
    }
    std::vector<std::vector<Face>> out;
    for (auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Label> vertices_;
  std::vector<Face> facets_;
};

/// Faces are the chains of P; the empty poset gives {∅}.
inline SimplicialComplex order_complex(const Poset& p) {
  if (p.empty()) return SimplicialComplex::irrelevant();
  std::vector<std::vector<std::size_t>> up(p.size());
  std::vector<bool> has_lower(p.size(), false);
  for (auto [lo, hi] : cover_indices(p)) {
    up[lo].push_back(hi);
    has_lower[hi] = true;
  }
  // Maximal chains are exactly the saturated chains from a minimal to a maximal element.
  std::vector<Face> facets;
  Face chain;
  auto walk = [&](auto&& self, std::size_t x) -> void {
    chain.push_back(x);
    if (up[x].empty()) facets.push_back(chain);
    for (auto y : up[x]) self(self, y);
    chain.pop_back();
  };
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!has_lower[x]) walk(walk, x);
  return SimplicialComplex::from_facets(p.elements(), std::move(facets));
}

namespace detail {

/// Boundary of every d-face as a sparse vector over the (d-1)-faces.
/// d = 0 is the augmentation onto the empty face.
inline std::vector<SparseVector> boundary_columns(const std::vector<Face>& faces,
                                                  const std::vector<Face>& lower) {
  std::vector<SparseVector> cols;
  cols.reserve(faces.size());
  Face facet_minus;
  for (const auto& f : faces) {
    SparseVector col;
    for (std::size_t j = 0; j < f.size(); ++j) {
      facet_minus.assign(f.begin(), f.end());
      facet_minus.erase(facet_minus.begin() + static_cast<std::ptrdiff_t>(j));
      auto it = std::lower_bound(lower.begin(), lower.end(), facet_minus);
      ensure(it != lower.end() && *it == facet_minus, "boundary face missing from complex");
      col.emplace_back(static_cast<std::size_t>(it - lower.begin()), Rational(j % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace detail

/// Reduced (augmented) chain complex with exact boundary matrices.
struct ChainComplex {
  /// dims[d + 1] = number of d-faces, starting at d = -1.
  std::vector<std::size_t> dims;
  /// boundaries[d] is ∂_d : C_d → C_{d-1}, shaped dims[d] × dims[d + 1], for d ≥ 0.
  std::vector<RationalMatrix> boundaries;
};

inline ChainComplex chain_complex(const SimplicialComplex& k) {
  const auto faces = k.faces_by_dimension();
  ChainComplex cc;
  for (const auto& level : faces) cc.dims.push_back(level.size());
  for (std::size_t d = 1; d < faces.size(); ++d) {
    RationalMatrix m(faces[d - 1].size(), faces[d].size());
    auto cols = detail::boundary_columns(faces[d], faces[d - 1]);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : cols[c]) m(r, c) = v;
    cc.boundaries.push_back(std::move(m));
  }
  for (std::size_t d = 1; d < cc.boundaries.size(); ++d)
    detail::ensure((cc.boundaries[d - 1] * cc.boundaries[d]).is_zero(),
                   "boundary of a boundary is nonzero");
  return cc;
}

/// dim H̃_i for i = -1 .. dim K.
inline std::vector<std::size_t> all_reduced_betti(const SimplicialComplex& k) {
  const auto faces = k.faces_by_dimension();
  // ranks[d + 1] = rank ∂_d, with ∂_{-1} = 0 and ∂_{dim+1} = 0.
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t d = 1; d < faces.size(); ++d)
    ranks[d] = sparse_rank(detail::boundary_columns(faces[d], faces[d - 1]));
  std::vector<std::size_t> betti;
  for (std::size_t d = 0; d < faces.size(); ++d) {
    const std::size_t cycles = faces[d].size() - ranks[d];
    detail::ensure(cycles >= ranks[d + 1], "boundary rank exceeds cycle dimension");
    betti.push_back(cycles - ranks[d + 1]);
  }
  return betti;
}

/// dim H̃_i over the rationals; 0 above the dimension of K.
inline std::size_t reduced_betti(const SimplicialComplex& k, int i) {
  if (i < -1) throw DomainError("reduced homology index must be at least -1");
  if (k.is_void()) throw VoidComplex();
  if (i > k.dimension()) return 0;
  return all_reduced_betti(k)[static_cast<std::size_t>(i + 1)];
}

/// Σ_d (-1)^d f_d over faces, including the empty face at d = -1.
inline std::int64_t reduced_euler_characteristic(const SimplicialComplex& k) {
  const auto faces = k.faces_by_dimension();
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < faces.size(); ++d)
    chi += (d % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(faces[d].size());
  return chi;
}

}  // namespace posets
