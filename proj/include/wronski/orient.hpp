#pragma once

// Orientability of the smooth locus of the spherical toric variety attached to
// a lattice polygon, decided from the facet description U x >= -b.
//
// Criterion: orientable iff there is a basis of GF(2)^{1+d} in which every
// extended sign vector eps_i^+ = (b_i mod 2, u_i mod 2) has an odd number of
// nonzero coordinates. Such a basis exists iff the inhomogeneous system
// phi . eps_i^+ = 1 (for all facets i) has a solution phi over GF(2):
//   - given the basis B, "sum of B-coordinates" is a functional taking the
//     value 1 on every eps_i^+;
//   - given phi, pick v with phi(v) = 1, extend to a basis and replace every
//     basis vector w with phi(w) = 0 by w + v. phi is then 1 on the whole
//     basis, so it coincides with the sum-of-coordinates functional of that
//     basis and every eps_i^+ has odd weight.
// Deciding solvability needs one Gaussian elimination instead of a search over
// bases.

#include <cstdint>
#include <optional>
#include <vector>

#include "wronski/lattice.hpp"

namespace wronski::orient {

/// One facet inequality u . x >= -b with primitive integer normal u.
struct FacetRow {
  std::vector<std::int64_t> u;
  std::int64_t b = 0;
  friend auto operator<=>(const FacetRow&, const FacetRow&) = default;
};

struct FacetSystem {
  std::vector<FacetRow> rows;  // sorted lexicographically
  std::size_t dimension() const { return rows.empty() ? 0 : rows.front().u.size(); }
};

/// Bits of eps_i^+ in exponent form (-1 -> 1, +1 -> 0); bit 0 is the
/// b-coordinate, bit k the k-th coordinate of u.
struct SignVectorGF2 {
  std::vector<std::uint8_t> bits;
  friend bool operator==(const SignVectorGF2&, const SignVectorGF2&) = default;
};

/// Irredundant facet description of conv(vertices) with primitive normals.
/// Throws DomainError for fewer than three non-collinear points.
FacetSystem facet_system(const std::vector<lattice::LatticePoint>& vertices);

std::vector<SignVectorGF2> epsilon_vectors(const FacetSystem& f);

/// GF(2) rank of a list of sign vectors.
std::size_t gf2_rank(const std::vector<SignVectorGF2>& vectors);

struct OrientabilityResult {
  bool orientable = false;
  /// phi with phi . eps_i^+ = 1 for every facet, when one exists.
  std::optional<std::vector<std::uint8_t>> witness;
};

OrientabilityResult orientability(const FacetSystem& f);
inline bool orientable(const FacetSystem& f) { return orientability(f).orientable; }

/// conv{0, delta e1, delta e2} and its image conv{0, delta e1, delta(e1+e2)}
/// under the inverse of tau = [[1,-1],[0,1]].
std::vector<lattice::LatticePoint> dilated_triangle(std::int64_t delta);
std::vector<lattice::LatticePoint> dilated_alcoved_triangle(std::int64_t delta);

}  // namespace wronski::orient
