#include "wronski/lattice.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>

#include "wronski/errors.hpp"

namespace wronski::lattice {

LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.i - b.i, a.j - b.j}; }

std::int64_t orient2d(LatticePoint a, LatticePoint b, LatticePoint c) {
  return (b.i - a.i) * (c.j - a.j) - (b.j - a.j) * (c.i - a.i);
}

std::int64_t normalized_volume(LatticePoint a, LatticePoint b, LatticePoint c) {
  const std::int64_t det = orient2d(a, b, c);
  if (det == 0) throw DomainError("degenerate (collinear) triangle");
  return det < 0 ? -det : det;
}

std::int64_t normalized_volume(const Triangle& tri) {
  return normalized_volume(tri.vertices[0], tri.vertices[1], tri.vertices[2]);
}

Triangle Triangle::make(LatticePoint a, LatticePoint b, LatticePoint c) {
  Triangle t;
  t.vertices = {a, b, c};
  std::sort(t.vertices.begin(), t.vertices.end());
  t.cell_volume = normalized_volume(a, b, c);
  const auto& v = t.vertices;
  // In row-major order a translate of the unit simplex reads p, p+e1, p+e2.
  const bool up = v[1] - v[0] == LatticePoint{1, 0} && v[2] - v[0] == LatticePoint{0, 1};
  t.orientation = up ? Orientation::up : Orientation::down;
  return t;
}

namespace {

// Andrew's monotone chain; returns hull vertices counterclockwise without
// collinear points.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t n = pts.size() - 1, lower = k + 1; n-- > 0;) {
    const auto& p = pts[n];
    while (k >= lower && orient2d(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool on_segment(LatticePoint a, LatticePoint b, LatticePoint p) {
  if (orient2d(a, b, p) != 0) return false;
  return std::min(a.i, b.i) <= p.i && p.i <= std::max(a.i, b.i) && std::min(a.j, b.j) <= p.j &&
         p.j <= std::max(a.j, b.j);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

Triangulation2D Triangulation2D::from_cells(std::vector<LatticePoint> points,
                                            const std::vector<std::array<std::size_t, 3>>& cells,
                                            std::optional<std::vector<int>> coloring) {
  if (points.size() < 3) throw DomainError("a triangulation needs at least three points");
  if (cells.empty()) throw DomainError("a triangulation needs at least one cell");
  if (coloring && coloring->size() != points.size())
    throw DomainError("coloring length does not match point count");

  // Canonical point order; remember where every input index went.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<std::size_t> new_index(points.size());
  Triangulation2D t;
  t.points_.reserve(points.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    t.points_.push_back(points[order[k]]);
    if (k > 0 && t.points_[k] == t.points_[k - 1]) throw DomainError("duplicate lattice point");
  }
  for (std::size_t k = 0; k < t.points_.size(); ++k) t.index_.emplace(t.points_[k], k);

  std::vector<std::array<std::size_t, 3>> canon;
  canon.reserve(cells.size());
  for (const auto& c : cells) {
    std::array<std::size_t, 3> idx{};
    for (int v = 0; v < 3; ++v) {
      if (c[v] >= points.size()) throw DomainError("cell references unknown point index");
      idx[v] = new_index[c[v]];
    }
    std::sort(idx.begin(), idx.end());
    if (idx[0] == idx[1] || idx[1] == idx[2]) throw DomainError("cell repeats a vertex");
    canon.push_back(idx);
  }
  std::sort(canon.begin(), canon.end());
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
    throw StructuralError("duplicate cell");
  t.cells_ = canon;
  for (const auto& c : canon)
    t.triangles_.push_back(Triangle::make(t.points_[c[0]], t.points_[c[1]], t.points_[c[2]]));

  // Edge incidences.
  std::map<Edge, std::vector<std::size_t>> incident;  // edge -> apex point indices
  std::vector<bool> used(t.points_.size(), false);
  for (const auto& c : canon) {
    for (int v = 0; v < 3; ++v) used[c[v]] = true;
    incident[{c[0], c[1]}].push_back(c[2]);
    incident[{c[0], c[2]}].push_back(c[1]);
    incident[{c[1], c[2]}].push_back(c[0]);
  }
  for (std::size_t k = 0; k < used.size(); ++k)
    if (!used[k]) throw StructuralError("point is not a vertex of any cell (dangling point)");

  const auto hull = convex_hull(t.points_);
  if (hull.size() < 3) throw DomainError("points are collinear");
  std::int64_t hull_volume = 0;
  std::int64_t hull_boundary_points = 0;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const auto& a = hull[k];
    const auto& b = hull[(k + 1) % hull.size()];
    hull_volume += a.i * b.j - a.j * b.i;
    hull_boundary_points += gcd64(b.i - a.i, b.j - a.j);
  }
  auto on_hull_boundary = [&](LatticePoint p) {
    for (std::size_t k = 0; k < hull.size(); ++k)
      if (on_segment(hull[k], hull[(k + 1) % hull.size()], p)) return true;
    return false;
  };
  auto on_common_hull_edge = [&](LatticePoint p, LatticePoint q) {
    for (std::size_t k = 0; k < hull.size(); ++k) {
      const auto& a = hull[k];
      const auto& b = hull[(k + 1) % hull.size()];
      if (on_segment(a, b, p) && on_segment(a, b, q)) return true;
    }
    return false;
  };

  std::int64_t volume = 0;
  for (const auto& tri : t.triangles_) volume += tri.cell_volume;
  if (volume != hull_volume)
    throw StructuralError("cell volumes sum to " + std::to_string(volume) +
                          " but the convex hull has normalized volume " +
                          std::to_string(hull_volume));

  for (const auto& [edge, apexes] : incident) {
    t.edges_.push_back(edge);
    const auto& p = t.points_[edge.a];
    const auto& q = t.points_[edge.b];
    if (apexes.size() > 2) throw StructuralError("edge shared by more than two cells");
    if (apexes.size() == 2) {
      const auto s0 = orient2d(p, q, t.points_[apexes[0]]);
      const auto s1 = orient2d(p, q, t.points_[apexes[1]]);
      if ((s0 > 0) == (s1 > 0)) throw StructuralError("overlapping cells across an edge");
      t.interior_edges_.push_back(edge);
      t.apexes_.emplace(edge, std::array<std::size_t, 2>{std::min(apexes[0], apexes[1]),
                                                          std::max(apexes[0], apexes[1])});
    } else if (!on_common_hull_edge(p, q)) {
      throw StructuralError("dangling edge: a cell edge with one incident cell is not on the boundary");
    }
  }

  t.boundary_point_.resize(t.points_.size());
  for (std::size_t k = 0; k < t.points_.size(); ++k) t.boundary_point_[k] = on_hull_boundary(t.points_[k]);
  t.dense_ = static_cast<std::int64_t>(t.points_.size()) * 2 == hull_volume + hull_boundary_points + 2;

  if (coloring) {
    t.coloring_.resize(t.points_.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      const int c = (*coloring)[k];
      if (c < 0 || c > 2) throw DomainError("colors must lie in {0,1,2}");
      t.coloring_[new_index[k]] = c;
    }
    for (const auto& c : canon) {
      const int a = t.coloring_[c[0]], b = t.coloring_[c[1]], d = t.coloring_[c[2]];
      if (a == b || b == d || a == d) throw DomainError("coloring is not proper on a cell");
    }
  } else {
    // Propagate through the dual graph; every cell must carry all three colors.
    t.coloring_.assign(t.points_.size(), -1);
    std::map<Edge, std::vector<std::size_t>> edge_cells;
    for (std::size_t k = 0; k < canon.size(); ++k) {
      const auto& c = canon[k];
      edge_cells[{c[0], c[1]}].push_back(k);
      edge_cells[{c[0], c[2]}].push_back(k);
      edge_cells[{c[1], c[2]}].push_back(k);
    }
    std::vector<bool> done(canon.size(), false);
    for (std::size_t seed = 0; seed < canon.size(); ++seed) {
      if (done[seed]) continue;
      std::deque<std::size_t> queue{seed};
      done[seed] = true;
      for (int v = 0; v < 3; ++v)
        if (t.coloring_[canon[seed][v]] < 0) t.coloring_[canon[seed][v]] = v;
      while (!queue.empty()) {
        const auto cell = queue.front();
        queue.pop_front();
        const auto& c = canon[cell];
        int mask = 0;
        for (int v = 0; v < 3; ++v)
          if (t.coloring_[c[v]] >= 0) mask |= 1 << t.coloring_[c[v]];
        for (int v = 0; v < 3; ++v) {
          if (t.coloring_[c[v]] >= 0) continue;
          const int free = mask == 3 ? 2 : mask == 5 ? 1 : mask == 6 ? 0 : -1;
          if (free < 0) throw NotFoldableError();
          t.coloring_[c[v]] = free;
          mask |= 1 << free;
        }
        if (mask != 7 || t.coloring_[c[0]] == t.coloring_[c[1]] ||
            t.coloring_[c[1]] == t.coloring_[c[2]] || t.coloring_[c[0]] == t.coloring_[c[2]])
          throw NotFoldableError();
        for (const Edge e : {Edge{c[0], c[1]}, Edge{c[0], c[2]}, Edge{c[1], c[2]}})
          for (auto other : edge_cells[e])
            if (!done[other]) {
              done[other] = true;
              queue.push_back(other);
            }
      }
    }
  }
  return t;
}

std::optional<std::size_t> Triangulation2D::index_of(LatticePoint p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

int Triangulation2D::color(LatticePoint p) const {
  auto k = index_of(p);
  if (!k) throw DomainError("point is not part of the triangulation");
  return coloring_[*k];
}

std::vector<LatticePoint> lattice_points(std::int64_t delta) {
  if (delta < 1) throw DomainError("delta must be a positive integer");
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>((delta + 1) * (delta + 2) / 2));
  for (std::int64_t j = 0; j <= delta; ++j)
    for (std::int64_t i = 0; i + j <= delta; ++i) out.push_back({i, j});
  return out;
}

int honeycomb_color(LatticePoint p) {
  const auto r = (p.i - p.j) % 3;
  return static_cast<int>(r < 0 ? r + 3 : r);
}

Triangulation2D honeycomb_triangulation(std::int64_t delta) {
  auto pts = lattice_points(delta);
  std::map<LatticePoint, std::size_t> idx;
  for (std::size_t k = 0; k < pts.size(); ++k) idx.emplace(pts[k], k);
  std::vector<std::array<std::size_t, 3>> cells;
  cells.reserve(static_cast<std::size_t>(delta * delta));
  for (std::int64_t j = 0; j < delta; ++j)
    for (std::int64_t i = 0; i + j < delta; ++i) {
      cells.push_back({idx.at({i, j}), idx.at({i + 1, j}), idx.at({i, j + 1})});
      if (i + j <= delta - 2)
        cells.push_back({idx.at({i + 1, j}), idx.at({i, j + 1}), idx.at({i + 1, j + 1})});
    }
  std::vector<int> colors;
  colors.reserve(pts.size());
  for (const auto& p : pts) colors.push_back(honeycomb_color(p));
  return Triangulation2D::from_cells(std::move(pts), cells, std::move(colors));
}

FVector f_vector(const Triangulation2D& t) {
  FVector f;
  f.vertices = static_cast<std::int64_t>(t.points().size());
  f.edges = static_cast<std::int64_t>(t.edges().size());
  f.triangles = static_cast<std::int64_t>(t.triangles().size());
  f.interior_edges = static_cast<std::int64_t>(t.interior_edges().size());
  f.interior_vertices = std::count(t.boundary_point().begin(), t.boundary_point().end(), false);
  if (f.vertices - f.edges + f.triangles != 1)
    throw StructuralError("Euler characteristic of the complex is not one");
  return f;
}

DualBipartition dual_bipartition(const Triangulation2D& t) {
  const auto& cells = t.cells();
  std::map<Edge, std::vector<std::size_t>> edge_cells;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& c = cells[k];
    edge_cells[{c[0], c[1]}].push_back(k);
    edge_cells[{c[0], c[2]}].push_back(k);
    edge_cells[{c[1], c[2]}].push_back(k);
  }
  std::vector<int> side(cells.size(), -1);
  for (std::size_t seed = 0; seed < cells.size(); ++seed) {
    if (side[seed] >= 0) continue;
    side[seed] = 0;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      const auto k = queue.front();
      queue.pop_front();
      const auto& c = cells[k];
      for (const Edge e : {Edge{c[0], c[1]}, Edge{c[0], c[2]}, Edge{c[1], c[2]}})
        for (auto other : edge_cells[e]) {
          if (other == k) continue;
          if (side[other] < 0) {
            side[other] = 1 - side[k];
            queue.push_back(other);
          } else if (side[other] == side[k]) {
            throw NotFoldableError();
          }
        }
    }
  }
  DualBipartition out;
  for (std::size_t k = 0; k < cells.size(); ++k)
    (side[k] == 0 ? out.black : out.white).push_back(t.triangles()[k]);
  return out;
}

std::int64_t signature(const Triangulation2D& t) {
  const auto parts = dual_bipartition(t);
  auto odd = [](const std::vector<Triangle>& v) {
    return std::count_if(v.begin(), v.end(), [](const Triangle& x) { return x.cell_volume % 2 != 0; });
  };
  const std::int64_t diff = odd(parts.black) - odd(parts.white);
  return diff < 0 ? -diff : diff;
}

std::vector<LatticePoint> hexagon_points() {
  return {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
}

Triangulation2D hexagon_triangulation() {
  // Indices into hexagon_points(); cells of the lower hull of heights
  // (3,1,1,0,1,1,3).
  const std::vector<std::array<std::size_t, 3>> cells = {
      {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {1, 3, 5}, {3, 4, 5}, {4, 5, 6}};
  return Triangulation2D::from_cells(hexagon_points(), cells, std::vector<int>{0, 1, 2, 0, 1, 2, 0});
}

TriangulationFile triangulation_from_json(const nlohmann::json& j) {
  try {
    std::vector<LatticePoint> pts;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw DomainError("points must be [i, j] pairs");
      pts.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }
    std::vector<std::array<std::size_t, 3>> cells;
    for (const auto& c : j.at("triangles")) {
      if (!c.is_array() || c.size() != 3) throw DomainError("triangles must be index triples");
      cells.push_back({c[0].get<std::size_t>(), c[1].get<std::size_t>(), c[2].get<std::size_t>()});
    }
    std::optional<std::vector<int>> coloring;
    if (j.contains("coloring")) coloring = j.at("coloring").get<std::vector<int>>();
    std::optional<std::vector<Rational>> heights;
    if (j.contains("heights")) {
      const auto& h = j.at("heights");
      if (!h.is_array() || h.size() != pts.size())
        throw DomainError("heights must list one value per point");
      std::vector<Rational> raw;
      for (const auto& v : h)
        raw.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                    : parse_rational(v.dump()));
      heights = std::move(raw);
    }
    auto input_points = pts;
    TriangulationFile out{Triangulation2D::from_cells(std::move(pts), cells, std::move(coloring)),
                          std::nullopt};
    if (heights) {
      std::vector<Rational> canon(out.triangulation.points().size());
      for (std::size_t k = 0; k < input_points.size(); ++k)
        canon[*out.triangulation.index_of(input_points[k])] = (*heights)[k];
      out.heights = std::move(canon);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed triangulation file: ") + e.what());
  }
}

nlohmann::json to_json(const Triangulation2D& t) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : t.points()) pts.push_back({p.i, p.j});
  nlohmann::json tris = nlohmann::json::array();
  for (const auto& c : t.cells()) tris.push_back({c[0], c[1], c[2]});
  return {{"points", pts}, {"triangles", tris}, {"coloring", t.coloring()}};
}

TriangulationFile load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open triangulation file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("cannot parse " + path + ": " + e.what());
  }
  return triangulation_from_json(j);
}

}  // namespace wronski::lattice
