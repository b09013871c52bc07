#include "doctest.h"

#include <algorithm>
#include <random>

#include "wronski/errors.hpp"
#include "wronski/heights.hpp"
#include "wronski/realroots.hpp"

using namespace wronski;
using namespace wronski::realroots;
using polysys::Colors;

namespace {

UnivariatePolynomial up(std::vector<long> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return UnivariatePolynomial(q);
}

Polynomial X() { return Polynomial::variable(polysys::xy(), "x"); }
Polynomial Y() { return Polynomial::variable(polysys::xy(), "y"); }
Polynomial num(const Rational& c) { return Polynomial::constant(polysys::xy(), c); }

// Coefficients of a polynomial in x alone.
UnivariatePolynomial in_x(const Polynomial& p) {
  const auto k = p.var_index("x");
  std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(p.degree("x") + 1, 0)));
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k) REQUIRE(e[i] == 0);
    c[e[k]] += v;
  }
  return UnivariatePolynomial(c);
}

long small(std::mt19937_64& rng, int range) {
  return static_cast<long>(rng() % (2 * range + 1)) - range;
}

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Polynomial random_poly(std::mt19937_64& rng, int deg_x, int deg_y) {
  Polynomial p(polysys::xy());
  for (int i = 0; i <= deg_x; ++i)
    for (int j = 0; j <= deg_y; ++j)
      if (rng() % 3 != 0) p += Polynomial::monomial(polysys::xy(), {std::uint32_t(i), std::uint32_t(j)}, small(rng, 5));
  p += Polynomial::monomial(polysys::xy(), {0, std::uint32_t(deg_y)}, 1 + static_cast<long>(rng() % 5));
  return p;
}

polysys::Configuration rho_config(long delta) {
  return polysys::honeycomb_configuration(heights::rho_heights(delta));
}

Colors colors(const char* a, const char* b, const char* c) {
  return {parse_rational(a), parse_rational(b), parse_rational(c)};
}

polysys::Configuration hexagon() {
  const auto hex = lattice::hexagon_triangulation();
  const std::map<lattice::LatticePoint, long> w{{{0, 0}, 3}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 0},
                                                {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 3}};
  std::vector<Rational> h;
  for (const auto& p : hex.points()) h.push_back(w.at(p));
  return polysys::configuration_from(hex, h);
}

}  // namespace

TEST_CASE("sturm counts") {
  CHECK(sturm_count(up({-2, 0, 1}), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(up({1, 0, 1}), Rational(-10), Rational(10)) == 0);
  const auto five = UnivariatePolynomial::from_roots({1, 2, 3, 4, 5});
  CHECK(sturm_count(five, Rational(0), Rational(6)) == 5);
  CHECK(sturm_count(five, Rational(1), Rational(5)) == 4);
  CHECK(sturm_count(five, Rational(0), Rational(1)) == 1);
  CHECK(sturm_count(five, std::nullopt, std::nullopt) == 5);
  CHECK(sturm_count(five, Rational(5), std::nullopt) == 0);
  CHECK(sturm_count(UnivariatePolynomial::from_roots({2, 2, 2, -1}), std::nullopt, std::nullopt) == 2);
  CHECK_THROWS_WITH_AS(sturm_count(UnivariatePolynomial(), Rational(0), Rational(1)), "identically zero",
                       DomainError);
  CHECK_THROWS_AS(sturm_count(five, Rational(1), Rational(1)), DomainError);
}

TEST_CASE("sturm oracle on constructed polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> roots;
    const int linear = static_cast<int>(rng() % 7);
    for (int k = 0; k < linear; ++k) roots.push_back(frac(small(rng, 40), 1 + static_cast<long>(rng() % 6)));
    auto p = UnivariatePolynomial::from_roots(roots);
    // irreducible quadratics (x - u)^2 + v, v > 0
    const int quadratics = static_cast<int>(rng() % 3);
    for (int k = 0; k < quadratics; ++k) {
      const Rational u = frac(small(rng, 10), 1 + static_cast<long>(rng() % 4));
      const Rational v = frac(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
      p = p * UnivariatePolynomial({u * u + v, -2 * u, 1});
    }
    p = p * UnivariatePolynomial({frac(1 + static_cast<long>(rng() % 5), 3)});
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    CAPTURE(p.to_string("x"));
    CHECK(sturm_count(p, std::nullopt, std::nullopt) == roots.size());
    const Rational a = small(rng, 5), b = a + 1 + static_cast<long>(rng() % 5);
    const auto inside = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return a < r && r <= b; });
    CHECK(sturm_count(p, a, b) == static_cast<std::size_t>(inside));

    const auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == roots.size());
    for (std::size_t k = 0; k < iso.size(); ++k) {
      CHECK(iso[k].lo <= roots[k]);
      CHECK(roots[k] <= iso[k].hi);
      if (k > 0) CHECK(iso[k - 1].hi < iso[k].lo);
    }
  }
}

TEST_CASE("root isolation") {
  const auto two = up({-2, 0, 1});
  const auto iso = isolate_real_roots(two);
  REQUIRE(iso.size() == 2);
  const auto neg = refine(two, iso[0], Rational(1, 4)), pos = refine(two, iso[1], Rational(1, 4));
  CHECK(neg.lo >= Rational(-3, 2));
  CHECK(neg.hi <= -1);
  CHECK(pos.lo >= 1);
  CHECK(pos.hi <= Rational(3, 2));
  const auto fine = refine(two, iso[1], Rational(1, 1000000));
  CHECK(fine.hi - fine.lo < Rational(1, 1000000));
  CHECK(fine.lo * fine.lo < 2);
  CHECK(fine.hi * fine.hi > 2);

  const auto cube = isolate_real_roots(UnivariatePolynomial::monomial(3));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].lo == 0);
  CHECK(cube[0].hi == 0);
  CHECK(cube[0].exact);

  std::mt19937_64 rng(7);
  std::vector<Rational> roots;
  while (roots.size() < 8) {
    const Rational r = frac(small(rng, 30), 1 + static_cast<long>(rng() % 8));
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  const auto p = UnivariatePolynomial::from_roots(roots);
  std::sort(roots.begin(), roots.end());
  const auto found = isolate_real_roots(p);
  REQUIRE(found.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    const auto iv = refine(p, found[k], Rational(1, 1 << 20));
    CHECK(iv.lo <= roots[k]);
    CHECK(roots[k] <= iv.hi);
  }

  CHECK(isolate_real_roots(up({1, 0, 1})).empty());
  const auto restricted = isolate_real_roots(UnivariatePolynomial::from_roots({-3, 1, 2, 7}), Rational(1), Rational(7));
  REQUIRE(restricted.size() == 2);
  CHECK(restricted[0].lo <= 2);
  CHECK(restricted[1].hi >= 7);
}

TEST_CASE("minimal positive root") {
  const auto r = min_positive_real_root(up({-1, 0, 1}));
  REQUIRE(r);
  CHECK(r->lo <= 1);
  CHECK(r->hi >= 1);
  CHECK(r->hi - r->lo < Rational(1, 10000));
  CHECK_FALSE(min_positive_real_root(up({1, 0, 1})));
  CHECK_FALSE(min_positive_real_root(UnivariatePolynomial::from_roots({0, -1})));
  const auto q = min_positive_real_root(up({-2, 0, 1}) * up({-3, 0, 0, 1}));
  REQUIRE(q);
  CHECK(to_double(q->lo) == doctest::Approx(1.41421).epsilon(1e-4));
}

TEST_CASE("gcd and squarefree part") {
  const auto a = UnivariatePolynomial::from_roots({1, 2, 2, Rational(-1, 3)});
  const auto b = UnivariatePolynomial::from_roots({2, 5, Rational(-1, 3)});
  CHECK(gcd(a, b).monic() == UnivariatePolynomial::from_roots({2, Rational(-1, 3)}));
  CHECK(squarefree_part(a).monic() == UnivariatePolynomial::from_roots({1, 2, Rational(-1, 3)}));
  const auto d = divmod(a, b);
  CHECK(d.quotient * b + d.remainder == a);
  CHECK(d.remainder.degree() < b.degree());
}

TEST_CASE("resultant examples") {
  const auto x = X(), y = Y();
  const auto r = resultant(y - num(1), y * y - x, "y");
  CHECK((r == num(1) - x || r == x - num(1)));
  CHECK(resultant(y - x, y - x, "y").is_zero());
  const std::vector<std::string> xt{"x", "t"};
  const auto u = Polynomial::variable(xt, "x"), t = Polynomial::variable(xt, "t");
  const auto one = Polynomial::constant(xt, 1);
  CHECK(resultant(u * u + one, u * u - t, "x") == (t + one) * (t + one));
  CHECK_THROWS_AS(resultant(num(2), x + num(1), "y"), DomainError);
}

TEST_CASE("subresultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_poly(rng, static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
    const auto g = random_poly(rng, static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
    const auto r = resultant(f, g, "y");
    const auto s = sylvester_resultant(f, g, "y");
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    CHECK((r == s || r == -s));
  }
}

TEST_CASE("resultant vanishes exactly on a common factor") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, 2, 1 + static_cast<int>(rng() % 2));
    const auto b = random_poly(rng, 2, 1 + static_cast<int>(rng() % 2));
    const auto h = random_poly(rng, 1, 1);
    CHECK(resultant(a * h, b * h, "y").is_zero());
    CHECK(sylvester_resultant(a * h, b * h, "y").is_zero());
    CHECK_FALSE(resultant(a * h, b * (h + num(1)), "y").is_zero());
  }
}

TEST_CASE("real intersection counts") {
  const auto x = X(), y = Y();
  const auto circle = x * x + y * y - num(1);
  const auto two = count_real_intersections(circle, y - x, 0, true);
  CHECK(two.count == 2);
  CHECK(two.total == 2);
  REQUIRE(two.points.size() == 2);
  for (const auto& [px, py] : two.points) {
    CHECK(std::abs(px) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
    CHECK(px == doctest::Approx(py).epsilon(1e-6));
  }
  const auto far = count_real_intersections(circle, x + y - num(10));
  CHECK(far.count == 0);
  CHECK(far.total == 2);

  const auto parallel = count_real_intersections(x - y * y, x - y * y - num(1));
  CHECK(parallel.count == 0);
  CHECK(parallel.total == 0);
  CHECK_THROWS_WITH_AS(count_real_intersections(circle * (x - y), x - y), "non-finite intersection",
                       DegenerateInstance);
  CHECK_THROWS_WITH_AS(count_real_intersections(circle, x - num(1)), "degenerate instance", DegenerateInstance);
}

TEST_CASE("decimal parameters are exact") {
  CHECK(parse_rational("0.98") == frac(49, 50));
  CHECK(parse_rational("-3.14") == frac(-157, 50));
  CHECK(parse_rational("010/08") == frac(5, 4));
}

TEST_CASE("figure pairs") {
  struct Case {
    long delta;
    const char* t;
    Colors c, cp;
    std::size_t expected;
  };
  const std::vector<Case> cases{
      {3, "0.98", colors("-3.14", "-8.13", "3.61"), colors("11.13", "-9.34", "1.82"), 3},
      {5, "0.6", colors("0.79", "0.11", "-0.72"), colors("0.37", "0.84", "-0.97"), 5},
      {4, "0.98", colors("0.99", "2.98", "1.95"), colors("14.46", "1.57", "2.21"), 0},
      {4, "0.98", colors("-10.46", "-1.07", "9.43"), colors("12.62", "9.97", "-0.86"), 0},
  };
  for (const auto& k : cases) {
    const auto pair = polysys::wronski_pair(rho_config(k.delta), k.c, k.cp, parse_rational(k.t));
    const auto r = count_real_intersections(pair.polys[0], pair.polys[1]);
    CAPTURE(k.delta);
    CHECK(r.count == k.expected);
    CHECK(r.total == k.delta * k.delta);
  }
}

TEST_CASE("Kushnirenko count and parity") {
  std::mt19937_64 rng(31337);
  const auto draw = [&] { return Rational(static_cast<long>(rng() % 2001) - 1000, 100); };
  int done = 0;
  while (done < 20) {
    const long delta = 2 + static_cast<long>(rng() % 2);
    const Rational t(1 + static_cast<long>(rng() % 99), 100);
    Colors c{draw(), draw(), draw()}, cp{draw(), draw(), draw()};
    if (std::any_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; }) ||
        std::any_of(cp.begin(), cp.end(), [](const Rational& v) { return v == 0; }))
      continue;
    const auto pair = polysys::wronski_pair(rho_config(delta), c, cp, t);
    const auto r = count_real_intersections(pair.polys[0], pair.polys[1], static_cast<std::uint64_t>(done));
    CHECK(r.total == delta * delta);
    CHECK(static_cast<long>(r.count) % 2 == (delta * delta) % 2);
    ++done;
  }
}

TEST_CASE("elimination of small meta-systems") {
  const auto one = polysys::meta_system(rho_config(1));
  const auto e1 = eliminate_to_t(one);
  CHECK(e1.E.degree() == 0);
  CHECK(isolate_real_roots(e1.E).empty());

  const auto three = polysys::meta_system(rho_config(3));
  const auto e3 = eliminate_to_t(three);
  CHECK(e3.E.monic() == up({1, 0, 0, -3, 0, 0, 9}).monic());
  CHECK(e3.degree_raw >= 6);
  CHECK(e3.squarefree);
  CHECK(sturm_count(e3.E, Rational(0), Rational(1)) == 0);
  CHECK(isolate_real_roots(e3.E).empty());
  const auto cert3 = certify_no_real_solutions(three, Rational(0), Rational(1));
  CHECK(cert3.certified);

  const auto hex = polysys::meta_system(hexagon());
  const auto eh = eliminate_to_t(hex);
  CHECK(eh.E.monic() == up({-1, 0, 0, 0, 0, 0, 4}).monic());
  CHECK(isolate_real_roots(eh.E).size() == 2);
  const auto cert = certify_no_real_solutions(hex, std::nullopt, std::nullopt);
  CHECK(cert.certified);
  CHECK(cert.method.find("projection") != std::string::npos);
}

TEST_CASE("eliminant divisibility") {
  // Lex Groebner bases of the ideals, computed independently
  const auto true_three = up({1, 0, 0, -3, 0, 0, 9});
  const auto true_hex = up({0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 4});
  const auto e3 = eliminate_to_t(polysys::meta_system(rho_config(3)));
  const auto eh = eliminate_to_t(polysys::meta_system(hexagon()));
  const auto lift = [](const EliminationResult& r) {
    return r.E * UnivariatePolynomial::monomial(r.t_power_removed);
  };
  CHECK(divmod(lift(e3), true_three).remainder.is_zero());
  CHECK(divmod(lift(eh), true_hex).remainder.is_zero());
}

TEST_CASE("elimination soundness on sampled t") {
  const auto m = polysys::meta_system(rho_config(3));
  const auto cert = certify_no_real_solutions(m, Rational(0), Rational(1));
  REQUIRE(cert.certified);
  std::mt19937_64 rng(2718);
  for (int k = 0; k < 20; ++k) {
    const Rational t(1 + static_cast<long>(rng() % 9999), 10000);
    std::array<Polynomial, 3> f;
    for (int i = 0; i < 3; ++i) f[i] = m.f[i].specialize({{"t", t}}).with_variables(polysys::xy());
    const auto pair = count_real_intersections(f[1], f[2], static_cast<std::uint64_t>(k), true);
    // every common real zero projects to a real root of both resultants
    const auto g = gcd(in_x(resultant(f[0], f[1], "y")), in_x(resultant(f[1], f[2], "y")));
    CAPTURE(to_string(t));
    CHECK(isolate_real_roots(g).empty());
    for (const auto& [px, py] : pair.points) {
      const double v = to_double(f[0].evaluate({{"x", from_double(px)}, {"y", from_double(py)}}));
      CHECK(std::abs(v) > 1e-9);
    }
  }
}

TEST_CASE("boundary faces") {
  const auto three = boundary_check(polysys::meta_system(rho_config(3)));
  REQUIRE(three.size() == 3);
  for (const auto& r : three) CHECK(r.empty);

  const auto one = boundary_check(polysys::meta_system(rho_config(1)));
  for (const auto& r : one) CHECK(r.empty);

  const auto hex = boundary_check(polysys::meta_system(hexagon()));
  const auto origin = std::find_if(hex.begin(), hex.end(), [](const BoundaryReport& r) { return r.label == "x=y=0"; });
  REQUIRE(origin != hex.end());
  CHECK(origin->empty);
  CHECK(origin->real_roots.empty());
  const auto faces = polysys::boundary_subsystems(polysys::meta_system(hexagon()));
  const auto restricted = std::find_if(faces.begin(), faces.end(), [](const auto& r) { return r.label == "x=y=0"; });
  REQUIRE(restricted != faces.end());
  REQUIRE(restricted->polys.size() == 1);
  CHECK(restricted->polys[0] == Polynomial::monomial(polysys::txy(), {3, 0, 0}, 1));
}

TEST_CASE("elimination record") {
  const auto j = to_json(eliminate_to_t(polysys::meta_system(hexagon())));
  CHECK(j["degree_squarefree"] == 6);
  REQUIRE(j["real_roots"].size() == 2);
  CHECK(j["min_positive_root"]["approx"].get<double>() == doctest::Approx(std::cbrt(0.5)).epsilon(1e-4));
}
