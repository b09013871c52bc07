#include "doctest.h"

#include <random>
#include <set>

#include "wronski/errors.hpp"
#include "wronski/polysys.hpp"

using namespace wronski;
using namespace wronski::polysys;
using poly::Polynomial;

namespace {

Polynomial var(const std::string& name) { return Polynomial::variable(txy(), name); }
Polynomial num(const Rational& c) { return Polynomial::constant(txy(), c); }

Polynomial mono(std::uint32_t t, std::uint32_t i, std::uint32_t j) {
  return Polynomial::monomial(txy(), {t, i, j}, 1);
}

Configuration hexagon() {
  const auto hex = lattice::hexagon_triangulation();
  const std::map<LatticePoint, long> w{{{0, 0}, 3}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 0},
                                       {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 3}};
  std::vector<Rational> h;
  for (const auto& p : hex.points()) h.push_back(w.at(p));
  return configuration_from(hex, h);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto x = Polynomial::variable(xy(), "x"), y = Polynomial::variable(xy(), "y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * x + y * y).evaluate({{"x", 3}, {"y", 4}}) == 25);
  CHECK(x.pow(3).derivative("x") == Rational(3) * x * x);
  CHECK_THROWS_AS((x * y).evaluate({{"x", 1}}), DomainError);
  CHECK((x * x + y).substitute("x", x + y) == x * x + Rational(2) * x * y + y * y + y);
  CHECK((Rational(2, 3) * x + Rational(4, 9)).content() == Rational(2, 9));
  CHECK((Rational(-2, 3) * x + Rational(4, 9)).primitive_part() == Rational(3) * x - Rational(2));
  CHECK((x * x * y - x).coefficient("x", 2) == y);
  CHECK((x * x * y - x).to_string() == "x^2*y - x");
  CHECK(Polynomial(xy()).to_string() == "0");
  CHECK((x * y + Rational(1, 2)).total_degree() == 2);
  CHECK_THROWS_AS(x + var("t"), DomainError);
  const auto p = Rational(-7, 3) * x * y * y + Rational(5);
  CHECK(Polynomial::from_json(p.to_json()) == p);
}

TEST_CASE("wronski polynomials") {
  const auto t = var("t"), x = var("x"), y = var("y");
  const Colors c{Rational(2), Rational(3), Rational(5)};
  const auto hex = hexagon();
  const auto w = wronski_polynomial(hex, c, std::nullopt);
  const auto expected = Rational(2) * (t.pow(3) + x * y + t.pow(3) * x * x * y * y) +
                        Rational(3) * t * (x + x * y * y) + Rational(5) * t * (y + x * x * y);
  CHECK(w == expected);

  const auto one = honeycomb_configuration(heights::HeightFunction::make(1, {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}}));
  CHECK(wronski_polynomial(one, c, std::nullopt) == num(2) + Rational(3) * x + Rational(5) * y);

  const auto rho3 = honeycomb_configuration(heights::rho_heights(3));
  CHECK(wronski_polynomial(rho3, c, std::nullopt).terms().at({9, 3, 0}) == 2);
}

TEST_CASE("meta-system of the hexagon and of small triangles") {
  const auto t = var("t"), x = var("x"), y = var("y");
  const auto m = meta_system(hexagon());
  CHECK(m.f[0] == t.pow(3) + x * y + t.pow(3) * x * x * y * y);
  CHECK(m.f[1] == t * (x + x * y * y));
  CHECK(m.f[2] == t * (y + x * x * y));

  const auto m1 = meta_system(honeycomb_configuration(heights::rho_heights(1)));
  CHECK(m1.f[0] == num(1));
  CHECK(m1.f[1] == mono(1, 1, 0));
  CHECK(m1.f[2] == mono(1, 0, 1));

  const auto m3 = meta_system(honeycomb_configuration(heights::rho_heights(3)));
  CHECK(m3.f[0] == num(1) + mono(3, 1, 1) + mono(9, 3, 0) + mono(9, 0, 3));
}

TEST_CASE("boundary subsystems") {
  const auto m3 = meta_system(honeycomb_configuration(heights::rho_heights(3)));
  const auto faces = boundary_subsystems(m3);
  REQUIRE(faces.size() == 3);
  CHECK(faces[0].label == "x=0");
  REQUIRE(faces[0].polys.size() == 3);
  CHECK(faces[0].polys[0] == num(1) + mono(9, 0, 3));
  CHECK(faces[0].polys[1] == mono(4, 0, 2));
  CHECK(faces[0].polys[2] == mono(1, 0, 1));
  CHECK(faces[1].polys[0] == num(1) + mono(9, 3, 0));
  CHECK(faces[1].polys[1] == mono(1, 1, 0));
  CHECK(faces[1].polys[2] == mono(4, 2, 0));

  const auto m1 = meta_system(honeycomb_configuration(heights::rho_heights(1)));
  const auto f1 = boundary_subsystems(m1);
  CHECK(f1[2].label == "x=y=0");
  REQUIRE(f1[2].polys.size() == 1);
  CHECK(f1[2].polys[0] == num(1));
}

TEST_CASE("support and degree identities") {
  for (std::int64_t d = 1; d <= 8; ++d) {
    for (const auto& w : {heights::rho_heights(d), heights::minimal_height(d)}) {
      const auto m = meta_system(honeycomb_configuration(w));
      std::set<LatticePoint> seen;
      long top = 0;
      for (int k = 0; k < 3; ++k) {
        long deg = 0;
        for (const auto& [e, c] : m.f[k].terms()) {
          const LatticePoint p{e[1], e[2]};
          CHECK(lattice::honeycomb_color(p) == k);
          CHECK(e[0] == w.at(p));
          CHECK(seen.insert(p).second);
          deg = std::max<long>(deg, e[1] + e[2]);
        }
        CHECK(deg <= d);
        top = std::max(top, deg);
      }
      CHECK(top == d);
      CHECK(seen.size() == lattice::lattice_points(d).size());
    }
  }
}

TEST_CASE("specializing t commutes with building") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num_d(-400, 400), den_d(1, 97);
  const auto cfg = honeycomb_configuration(heights::rho_heights(4));
  const Colors c{Rational(-3), Rational(7, 2), Rational(1, 5)};
  const auto symbolic = wronski_polynomial(cfg, c, std::nullopt);
  for (int k = 0; k < 50; ++k) {
    Rational q(num_d(rng), den_d(rng));
    q.canonicalize();
    const auto direct = wronski_polynomial(cfg, c, q);
    CHECK(symbolic.specialize({{"t", q}}).with_variables(xy()) == direct);
  }
}

TEST_CASE("f_k is the linear form of its color class on the deformed monomials") {
  for (std::int64_t d = 1; d <= 3; ++d) {
    const auto cfg = honeycomb_configuration(heights::rho_heights(d));
    const auto m = meta_system(cfg);
    for (int k = 0; k < 3; ++k) {
      Colors unit{Rational(0), Rational(0), Rational(0)};
      unit[k] = 1;
      CHECK(wronski_polynomial(cfg, unit, std::nullopt) == m.f[k]);
    }
  }
}

TEST_CASE("x <-> y symmetry of the rho meta-system") {
  for (std::int64_t d = 1; d <= 7; ++d) {
    const auto m = meta_system(honeycomb_configuration(heights::rho_heights(d)));
    auto swap = [](const Polynomial& p) {
      Polynomial q(txy());
      for (const auto& [e, c] : p.terms()) q.add_term({e[0], e[2], e[1]}, c);
      return q;
    };
    CHECK(swap(m.f[0]) == m.f[0]);
    CHECK(swap(m.f[1]) == m.f[2]);
    CHECK(swap(m.f[2]) == m.f[1]);
  }
}

TEST_CASE("configuration validation") {
  auto w = heights::rho_heights(2).values();
  w[{0, 0}] = Rational(1, 2);
  CHECK_THROWS_AS(honeycomb_configuration(heights::HeightFunction::make(2, w)), DomainError);
  CHECK_THROWS_AS(honeycomb_configuration(heights::rho_heights(2), {{{0, 0}, Rational(0)}}), DomainError);
  CHECK_THROWS_AS(honeycomb_configuration(heights::rho_heights(2), {{{5, 0}, Rational(1)}}), DomainError);
  const auto cfg = honeycomb_configuration(heights::rho_heights(2), {{{1, 1}, Rational(3)}});
  CHECK(meta_system(cfg).f[0].terms().at({3, 1, 1}) == 3);
}

TEST_CASE("hexagon configuration") {
  const auto a = hexagon_configuration(), b = hexagon();
  CHECK(a.points == b.points);
  CHECK(a.colors == b.colors);
  CHECK(a.heights == b.heights);
  CHECK(a.kappa == b.kappa);
  const auto scaled = hexagon_configuration({{{1, 1}, Rational(5)}});
  CHECK(scaled.kappa[3] == 5);
}
