#include "wronski/orient.hpp"

#include <algorithm>
#include <numeric>

#include "wronski/errors.hpp"

namespace wronski::orient {

using lattice::LatticePoint;

FacetSystem facet_system(const std::vector<LatticePoint>& vertices) {
  std::vector<LatticePoint> pts = vertices;
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DomainError("facet_system needs at least three distinct points");

  // Monotone chain, counterclockwise, collinear points dropped.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && lattice::orient2d(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t n = pts.size() - 1, lower = k + 1; n-- > 0;) {
    while (k >= lower && lattice::orient2d(hull[k - 2], hull[k - 1], pts[n]) <= 0) --k;
    hull[k++] = pts[n];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DomainError("facet_system: points are collinear");

  FacetSystem f;
  for (std::size_t e = 0; e < hull.size(); ++e) {
    const auto& a = hull[e];
    const auto& b = hull[(e + 1) % hull.size()];
    // Interior lies to the left of a -> b; rotate the edge direction left.
    std::int64_t ux = -(b.j - a.j);
    std::int64_t uy = b.i - a.i;
    const auto g = std::gcd(ux < 0 ? -ux : ux, uy < 0 ? -uy : uy);
    ux /= g;
    uy /= g;
    f.rows.push_back({{ux, uy}, -(ux * a.i + uy * a.j)});
  }
  std::sort(f.rows.begin(), f.rows.end());
  return f;
}

std::vector<SignVectorGF2> epsilon_vectors(const FacetSystem& f) {
  std::vector<SignVectorGF2> out;
  out.reserve(f.rows.size());
  for (const auto& row : f.rows) {
    SignVectorGF2 v;
    v.bits.push_back(static_cast<std::uint8_t>(row.b & 1));
    for (auto c : row.u) v.bits.push_back(static_cast<std::uint8_t>(c & 1));
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Row-reduces the augmented GF(2) system; rows are bit masks with the
// right-hand side stored at bit `width`. Pivots are taken column by column from
// the lowest unused row index, so witnesses are reproducible.
struct Gf2System {
  std::vector<std::uint64_t> rows;
  std::size_t width = 0;
};

std::uint64_t pack(const SignVectorGF2& v) {
  if (v.bits.size() > 63) throw DomainError("GF(2) vectors longer than 63 bits are not supported");
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < v.bits.size(); ++k)
    if (v.bits[k]) m |= std::uint64_t{1} << k;
  return m;
}

std::vector<std::size_t> eliminate(Gf2System& s) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < s.width && rank < s.rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = rank;
    while (pivot < s.rows.size() && !(s.rows[pivot] & bit)) ++pivot;
    if (pivot == s.rows.size()) continue;
    std::swap(s.rows[rank], s.rows[pivot]);
    for (std::size_t r = 0; r < s.rows.size(); ++r)
      if (r != rank && (s.rows[r] & bit)) s.rows[r] ^= s.rows[rank];
    pivot_cols.push_back(col);
    ++rank;
  }
  return pivot_cols;
}

}  // namespace

std::size_t gf2_rank(const std::vector<SignVectorGF2>& vectors) {
  Gf2System s;
  for (const auto& v : vectors) {
    s.rows.push_back(pack(v));
    s.width = std::max(s.width, v.bits.size());
  }
  return eliminate(s).size();
}

OrientabilityResult orientability(const FacetSystem& f) {
  const auto eps = epsilon_vectors(f);
  if (eps.empty()) throw DomainError("empty facet system");
  Gf2System s;
  s.width = eps.front().bits.size();
  const std::uint64_t rhs = std::uint64_t{1} << s.width;
  for (const auto& v : eps) s.rows.push_back(pack(v) | rhs);
  const auto pivots = eliminate(s);

  for (std::size_t r = pivots.size(); r < s.rows.size(); ++r)
    if (s.rows[r] == rhs) return {false, std::nullopt};  // 0 = 1

  // Reduced row echelon form: free variables are zero, pivots read off rhs.
  std::vector<std::uint8_t> phi(s.width, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) phi[pivots[r]] = (s.rows[r] & rhs) ? 1 : 0;

  for (const auto& v : eps) {
    unsigned dot = 0;
    for (std::size_t k = 0; k < v.bits.size(); ++k) dot ^= v.bits[k] & phi[k];
    if (dot != 1) throw std::logic_error("GF(2) witness failed re-verification");
  }
  return {true, std::move(phi)};
}

std::vector<LatticePoint> dilated_triangle(std::int64_t delta) {
  if (delta < 1) throw DomainError("delta must be a positive integer");
  return {{0, 0}, {delta, 0}, {0, delta}};
}

std::vector<LatticePoint> dilated_alcoved_triangle(std::int64_t delta) {
  if (delta < 1) throw DomainError("delta must be a positive integer");
  return {{0, 0}, {delta, 0}, {delta, delta}};
}

}  // namespace wronski::orient
