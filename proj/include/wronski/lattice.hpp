#pragma once

// Planar lattice triangulations: the honeycomb triangulation of the dilated
// standard triangle, plus validation and combinatorics for arbitrary 2D
// lattice complexes (e.g. the hexagon configuration loaded from a file).

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "wronski/rational.hpp"

namespace wronski::lattice {

/// Lattice point (i, j). Ordered row-major: first by j, then by i.
struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

LatticePoint operator+(LatticePoint a, LatticePoint b);
LatticePoint operator-(LatticePoint a, LatticePoint b);

enum class Orientation { up, down };

/// A nondegenerate lattice triangle. Vertices are stored in ascending point
/// order. `orientation` is `up` iff the triangle is a lattice translate of
/// conv{(0,0),(1,0),(0,1)}.
struct Triangle {
  std::array<LatticePoint, 3> vertices;
  Orientation orientation = Orientation::down;
  std::int64_t cell_volume = 0;

  /// Builds the canonical form; throws DomainError on collinear input.
  static Triangle make(LatticePoint a, LatticePoint b, LatticePoint c);

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.vertices == b.vertices; }
  friend auto operator<=>(const Triangle& a, const Triangle& b) { return a.vertices <=> b.vertices; }
};

/// |det(b - a, c - a)|; throws DomainError for collinear points.
std::int64_t normalized_volume(const Triangle& tri);
std::int64_t normalized_volume(LatticePoint a, LatticePoint b, LatticePoint c);

/// Twice the signed area of (a, b, c); positive for counterclockwise order.
std::int64_t orient2d(LatticePoint a, LatticePoint b, LatticePoint c);

struct Edge {
  std::size_t a = 0;  // point indices, a < b
  std::size_t b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct FVector {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t triangles = 0;
  std::int64_t interior_vertices = 0;
  std::int64_t interior_edges = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// A validated triangulation of a lattice polygon. Immutable after
/// construction; points and triangles are kept in canonical order so that any
/// serialization is byte-reproducible.
class Triangulation2D {
 public:
  /// Validates and canonicalizes. `cells` index into `points`. When
  /// `coloring` is absent a proper 3-coloring is derived (and a
  /// NotFoldableError raised if none exists); when present it must be proper.
  static Triangulation2D from_cells(std::vector<LatticePoint> points,
                                    const std::vector<std::array<std::size_t, 3>>& cells,
                                    std::optional<std::vector<int>> coloring = std::nullopt);

  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<std::array<std::size_t, 3>>& cells() const { return cells_; }
  /// Color of points()[k].
  const std::vector<int>& coloring() const { return coloring_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Edge>& interior_edges() const { return interior_edges_; }
  const std::vector<bool>& boundary_point() const { return boundary_point_; }

  std::optional<std::size_t> index_of(LatticePoint p) const;
  int color(LatticePoint p) const;

  /// Every lattice point of conv(points) is listed (Pick's theorem check).
  bool is_dense() const { return dense_; }

  /// For each interior edge: the two opposite apex point indices.
  const std::map<Edge, std::array<std::size_t, 2>>& edge_apexes() const { return apexes_; }

 private:
  std::vector<LatticePoint> points_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<std::size_t, 3>> cells_;
  std::vector<int> coloring_;
  std::vector<Edge> edges_;
  std::vector<Edge> interior_edges_;
  std::vector<bool> boundary_point_;
  std::map<Edge, std::array<std::size_t, 2>> apexes_;
  std::map<LatticePoint, std::size_t> index_;
  bool dense_ = false;
};

/// All (i, j) with i, j >= 0 and i + j <= delta, row-major (j, then i).
std::vector<LatticePoint> lattice_points(std::int64_t delta);

/// Color of (i, j) in the honeycomb triangulation: (i - j) mod 3.
int honeycomb_color(LatticePoint p);

/// Up-cells {(i,j),(i+1,j),(i,j+1)} for i+j <= delta-1 and down-cells
/// {(i+1,j),(i,j+1),(i+1,j+1)} for i+j <= delta-2.
Triangulation2D honeycomb_triangulation(std::int64_t delta);

FVector f_vector(const Triangulation2D& t);

struct DualBipartition {
  std::vector<Triangle> black;
  std::vector<Triangle> white;
};

/// 2-coloring of the dual graph; the class containing the smallest triangle is
/// black. Throws NotFoldableError when the dual graph is not bipartite.
DualBipartition dual_bipartition(const Triangulation2D& t);

/// |#black - #white| over cells of odd normalized volume.
std::int64_t signature(const Triangulation2D& t);

/// The seven-point hexagon configuration and its triangulation induced by the
/// heights (3,1,1,0,1,1,3), with the coloring of the worked example.
Triangulation2D hexagon_triangulation();
std::vector<LatticePoint> hexagon_points();

// ---- file format --------------------------------------------------------

/// {"points": [[i,j],...], "triangles": [[a,b,c],...], "coloring": [...],
///  "heights": [...]}; `heights`, when present, is returned separately.
struct TriangulationFile {
  Triangulation2D triangulation;
  std::optional<std::vector<Rational>> heights;  // parallel to points()
};

TriangulationFile triangulation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Triangulation2D& t);
TriangulationFile load_triangulation(const std::string& path);

}  // namespace wronski::lattice
