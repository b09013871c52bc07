#include "wronski/polysys.hpp"

#include <algorithm>

#include "wronski/errors.hpp"

namespace wronski::polysys {

namespace {

using poly::Exponents;

std::uint32_t integral_height(const Rational& h) {
  if (h.get_den() != 1) throw DomainError("heights must be integral to build polynomials");
  if (h < 0 || !h.get_num().fits_uint_p() || h.get_num() > 1000000)
    throw DomainError("height out of range: " + to_string(h));
  return static_cast<std::uint32_t>(h.get_num().get_ui());
}

Rational kappa_at(const Kappa& kappa, LatticePoint p) {
  auto it = kappa.find(p);
  return it == kappa.end() ? Rational(1) : it->second;
}

void check_kappa(const Kappa& kappa, const std::vector<LatticePoint>& points) {
  for (const auto& [p, v] : kappa) {
    if (std::find(points.begin(), points.end(), p) == points.end())
      throw DomainError("kappa given at a point outside the configuration");
    if (v <= 0) throw DomainError("kappa must be positive");
  }
}

Exponents exps(std::uint32_t t, const LatticePoint& p) {
  return {t, static_cast<std::uint32_t>(p.i), static_cast<std::uint32_t>(p.j)};
}

}  // namespace

Kappa unit_kappa(std::int64_t delta) {
  Kappa k;
  for (const auto& p : lattice::lattice_points(delta)) k[p] = 1;
  return k;
}

Configuration honeycomb_configuration(const heights::HeightFunction& omega, const Kappa& kappa) {
  Configuration cfg;
  cfg.points = lattice::lattice_points(omega.delta());
  check_kappa(kappa, cfg.points);
  for (const auto& p : cfg.points) {
    cfg.colors.push_back(lattice::honeycomb_color(p));
    cfg.heights.push_back(integral_height(omega.at(p)));
    cfg.kappa.push_back(kappa_at(kappa, p));
  }
  return cfg;
}

Configuration configuration_from(const lattice::Triangulation2D& t, const std::vector<Rational>& heights,
                                 const Kappa& kappa) {
  if (heights.size() != t.points().size()) throw DomainError("height vector length does not match point count");
  Configuration cfg;
  cfg.points = t.points();
  check_kappa(kappa, cfg.points);
  for (const auto& p : cfg.points)
    if (p.i < 0 || p.j < 0) throw DomainError("configuration points must have nonnegative coordinates");
  cfg.colors = t.coloring();
  for (std::size_t k = 0; k < cfg.points.size(); ++k) {
    cfg.heights.push_back(integral_height(heights[k]));
    cfg.kappa.push_back(kappa_at(kappa, cfg.points[k]));
  }
  return cfg;
}

Configuration hexagon_configuration(const Kappa& kappa) {
  const auto hex = lattice::hexagon_triangulation();
  const std::map<LatticePoint, long> w{{{0, 0}, 3}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 0},
                                       {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 3}};
  std::vector<Rational> h;
  for (const auto& p : hex.points()) h.push_back(w.at(p));
  return configuration_from(hex, h, kappa);
}

const std::vector<std::string>& txy() {
  static const std::vector<std::string> v{"t", "x", "y"};
  return v;
}

const std::vector<std::string>& xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

Polynomial wronski_polynomial(const Configuration& cfg, const Colors& c, const std::optional<Rational>& t) {
  if (!t) {
    Polynomial w(txy());
    for (std::size_t k = 0; k < cfg.points.size(); ++k)
      w.add_term(exps(cfg.heights[k], cfg.points[k]), c[cfg.colors[k]] * cfg.kappa[k]);
    return w;
  }
  Polynomial w(xy());
  for (std::size_t k = 0; k < cfg.points.size(); ++k) {
    const auto& p = cfg.points[k];
    w.add_term({static_cast<std::uint32_t>(p.i), static_cast<std::uint32_t>(p.j)},
               pow(*t, cfg.heights[k]) * c[cfg.colors[k]] * cfg.kappa[k]);
  }
  return w;
}

WronskiPair wronski_pair(const Configuration& cfg, const Colors& c, const Colors& c_prime, const Rational& t) {
  return {cfg, c, c_prime, t, {wronski_polynomial(cfg, c, t), wronski_polynomial(cfg, c_prime, t)}};
}

MetaSystem meta_system(const Configuration& cfg) {
  MetaSystem m{cfg, {Polynomial(txy()), Polynomial(txy()), Polynomial(txy())}};
  for (std::size_t k = 0; k < cfg.points.size(); ++k)
    m.f[cfg.colors[k]].add_term(exps(cfg.heights[k], cfg.points[k]), cfg.kappa[k]);
  return m;
}

std::vector<Restriction> boundary_subsystems(const MetaSystem& m) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> faces{
      {"x=0", {"x"}}, {"y=0", {"y"}}, {"x=y=0", {"x", "y"}}};
  std::vector<Restriction> out;
  for (const auto& [label, zero] : faces) {
    Restriction r{label, zero, {}, {}};
    std::map<std::string, Rational> values;
    for (const auto& v : zero) values[v] = 0;
    for (int color = 0; color < 3; ++color) {
      auto g = m.f[color].specialize(values);
      if (g.is_zero()) continue;
      r.colors.push_back(color);
      r.polys.push_back(std::move(g));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace wronski::polysys
