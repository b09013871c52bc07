#pragma once

// Height functions on the lattice points of delta*Delta_2 and the secondary
// cone of the honeycomb triangulation.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "wronski/lattice.hpp"
#include "wronski/rational.hpp"

namespace wronski::heights {

using lattice::LatticePoint;

/// Nonnegative rational heights on exactly the lattice points of delta*Delta_2.
class HeightFunction {
 public:
  /// Throws DomainError if the domain is not delta*Delta_2 or a value is negative.
  static HeightFunction make(std::int64_t delta, std::map<LatticePoint, Rational> values);

  std::int64_t delta() const { return delta_; }
  const std::map<LatticePoint, Rational>& values() const { return values_; }
  const Rational& at(LatticePoint p) const;
  bool is_integral() const;

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

 private:
  std::int64_t delta_ = 0;
  std::map<LatticePoint, Rational> values_;
};

/// One folding inequality  sum coeff * w(point) > 0  of the honeycomb
/// triangulation, indexed by anchor (i, j) with i, j >= 1, i + j <= delta:
///   kind 1: w(i-1,j-1) + w(i,j)   - w(i-1,j) - w(i,j-1)  (edge (i-1,j)-(i,j-1))
///   kind 2: w(i-1,j)   + w(i+1,j-1) - w(i,j-1) - w(i,j)  (edge (i,j-1)-(i,j))
///   kind 3: w(i,j-1)   + w(i-1,j+1) - w(i-1,j) - w(i,j)  (edge (i-1,j)-(i,j))
struct ConeInequality {
  int kind = 0;
  LatticePoint anchor;
  std::array<std::pair<LatticePoint, int>, 4> coefficients;  // two +1 apexes, two -1 edge ends

  Rational evaluate(const HeightFunction& w) const;
};

std::int64_t rho(LatticePoint p);

/// z1^2 + z2^2 + (z1 - z2)^2: the planar alcoved lift with z0 = 0.
std::int64_t alcoved_lift(std::int64_t z1, std::int64_t z2);

/// tau = [[1,-1],[0,1]] maps the alcoved triangle onto the standard one.
LatticePoint tau(LatticePoint p);
LatticePoint tau_inverse(LatticePoint p);

HeightFunction rho_heights(std::int64_t delta);

/// Integral height inducing the honeycomb triangulation, built by peeling
/// three-layer rings: from delta-3 (shifted by (1,1)) to delta, every ring
/// point p gets w(q) + w(r) - w(s) + 1 maximized over the folding
/// inequalities in which p is an apex and the other three points are known.
/// Seeds: delta = 1 all zeros; delta = 2 zeros on the central down cell;
/// delta = 3 zeros on the up cell at (1,1) followed by greedy propagation.
HeightFunction minimal_height(std::int64_t delta);

/// The points in the order minimal_height assigns them (seeds first).
std::vector<LatticePoint> minimal_height_order(std::int64_t delta);

/// All 3/2 (delta^2 - delta) facet inequalities, one per interior edge.
std::vector<ConeInequality> secondary_cone_facets(std::int64_t delta);

struct ConeCheck {
  bool inside = false;
  std::vector<ConeInequality> violated;
};

/// Exact strict check of every facet inequality.
ConeCheck in_secondary_cone(const HeightFunction& w);

/// Folding inequality of an arbitrary triangulation: for the interior edge
/// qr with apexes p and s, sum coeff_k * w(point_k) > 0 (integer coefficients,
/// invariant under adding affine functions).
struct FoldingInequality {
  lattice::Edge edge;
  std::vector<std::pair<std::size_t, Integer>> coefficients;  // point index -> coefficient
};

std::vector<FoldingInequality> folding_inequalities(const lattice::Triangulation2D& t);

/// True iff `w` (parallel to t.points()) satisfies every folding inequality
/// strictly, i.e. induces t as a regular triangulation.
bool induces(const lattice::Triangulation2D& t, const std::vector<Rational>& w);

// ---- file format: {"i,j": value} -----------------------------------------

std::map<LatticePoint, Rational> point_map_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::map<LatticePoint, Rational>& values);
HeightFunction load_heights(std::int64_t delta, const std::string& path);

/// "rho", "min" or a path to a height file.
HeightFunction resolve_height(std::int64_t delta, const std::string& spec);

}  // namespace wronski::heights
