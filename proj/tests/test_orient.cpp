#include "doctest.h"

#include <random>

#include "wronski/errors.hpp"
#include "wronski/orient.hpp"

using namespace wronski;
using namespace wronski::orient;
using lattice::LatticePoint;

namespace {

// Independent route: search all ordered bases of GF(2)^3 for one in which
// every eps vector has odd weight.
bool orientable_by_basis_search(const std::vector<SignVectorGF2>& eps) {
  auto bits = [](const SignVectorGF2& v) {
    unsigned m = 0;
    for (std::size_t k = 0; k < v.bits.size(); ++k) m |= unsigned(v.bits[k] & 1) << k;
    return m;
  };
  for (unsigned b0 = 1; b0 < 8; ++b0)
    for (unsigned b1 = 1; b1 < 8; ++b1)
      for (unsigned b2 = 1; b2 < 8; ++b2) {
        const unsigned cols[3] = {b0, b1, b2};
        // Express each eps in the basis by brute force.
        bool basis = true;
        std::vector<unsigned> coords(8, 99);
        for (unsigned c = 0; c < 8; ++c) {
          unsigned v = 0;
          for (int k = 0; k < 3; ++k)
            if (c >> k & 1) v ^= cols[k];
          if (coords[v] != 99) basis = false;
          coords[v] = c;
        }
        if (!basis) continue;
        bool ok = true;
        for (const auto& e : eps)
          if (__builtin_popcount(coords[bits(e)]) % 2 == 0) ok = false;
        if (ok) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("facet system of the dilated triangles") {
  for (std::int64_t d = 1; d <= 8; ++d) {
    const auto f = facet_system(dilated_triangle(d));
    REQUIRE(f.rows.size() == 3);
    CHECK(f.dimension() == 2);
    const std::vector<FacetRow> expected{{{-1, -1}, d}, {{0, 1}, 0}, {{1, 0}, 0}};
    CHECK(f.rows == expected);

    const auto g = facet_system(dilated_alcoved_triangle(d));
    const std::vector<FacetRow> alcoved{{{-1, 0}, d}, {{0, 1}, 0}, {{1, -1}, 0}};
    CHECK(g.rows == alcoved);
  }
}

TEST_CASE("orientable iff delta is odd") {
  for (std::int64_t d = 1; d <= 40; ++d) {
    CAPTURE(d);
    CHECK(orientable(facet_system(dilated_triangle(d))) == (d % 2 == 1));
    CHECK(orientable(facet_system(dilated_alcoved_triangle(d))) == (d % 2 == 1));
  }
}

TEST_CASE("hexagon is orientable") {
  const auto f = facet_system(lattice::hexagon_points());
  CHECK(f.rows.size() == 6);
  const auto r = orientability(f);
  CHECK(r.orientable);
  REQUIRE(r.witness);
  for (const auto& e : epsilon_vectors(f)) {
    int s = 0;
    for (std::size_t k = 0; k < e.bits.size(); ++k) s ^= (e.bits[k] & (*r.witness)[k]);
    CHECK(s == 1);
  }
}

TEST_CASE("witness criterion agrees with basis search on random polygons") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> coord(-6, 6);
  int checked = 0;
  while (checked < 300) {
    std::vector<LatticePoint> pts;
    for (int k = 0; k < 6; ++k) pts.push_back({coord(rng), coord(rng)});
    FacetSystem f;
    try {
      f = facet_system(pts);
    } catch (const DomainError&) {
      continue;
    }
    const auto eps = epsilon_vectors(f);
    CHECK(orientable(f) == orientable_by_basis_search(eps));
    ++checked;
  }
}

TEST_CASE("gf2 rank") {
  CHECK(gf2_rank({}) == 0);
  CHECK(gf2_rank({{{1, 0, 0}}, {{0, 1, 0}}, {{1, 1, 0}}}) == 2);
  CHECK(gf2_rank({{{1, 0, 1}}, {{0, 1, 1}}, {{0, 0, 1}}}) == 3);
}

TEST_CASE("facet system rejects degenerate input") {
  CHECK_THROWS_AS(facet_system({{0, 0}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(facet_system({{0, 0}, {1, 1}, {3, 3}}), DomainError);
}
