#pragma once

// Wronski polynomials, Wronski pairs and the meta-system f_0, f_1, f_2 in
// (t, x, y) attached to a colored, lifted planar point configuration.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wronski/heights.hpp"
#include "wronski/lattice.hpp"
#include "wronski/polynomial.hpp"

namespace wronski::polysys {

using lattice::LatticePoint;
using poly::Polynomial;

using Kappa = std::map<LatticePoint, Rational>;
using Colors = std::array<Rational, 3>;

/// Lattice points with colors, nonnegative integral heights and positive
/// weights kappa.
struct Configuration {
  std::vector<LatticePoint> points;
  std::vector<int> colors;
  std::vector<std::uint32_t> heights;
  std::vector<Rational> kappa;
};

/// kappa = 1 on every point of delta*Delta_2.
Kappa unit_kappa(std::int64_t delta);

/// Colors (i - j) mod 3 on delta*Delta_2. `kappa` may be partial: missing
/// points default to 1. Throws DomainError for non-integral heights, points
/// outside the triangle, or nonpositive kappa.
Configuration honeycomb_configuration(const heights::HeightFunction& omega, const Kappa& kappa = {});

/// Configuration of an arbitrary foldable triangulation with heights
/// parallel to t.points().
Configuration configuration_from(const lattice::Triangulation2D& t, const std::vector<Rational>& heights,
                                 const Kappa& kappa = {});

/// The seven-point hexagon with heights (3,1,1,0,1,1,3).
Configuration hexagon_configuration(const Kappa& kappa = {});

const std::vector<std::string>& txy();  // {"t", "x", "y"}
const std::vector<std::string>& xy();   // {"x", "y"}

/// sum_a t^omega(a) c_color(a) kappa_a x^a: over (t, x, y) when t is absent,
/// over (x, y) for a rational t.
Polynomial wronski_polynomial(const Configuration& cfg, const Colors& c, const std::optional<Rational>& t);

struct WronskiPair {
  Configuration cfg;
  Colors c;
  Colors c_prime;
  Rational t;
  std::array<Polynomial, 2> polys;
};

WronskiPair wronski_pair(const Configuration& cfg, const Colors& c, const Colors& c_prime, const Rational& t);

/// f_k = sum over color-k points of kappa_a t^omega(a) x^a.
struct MetaSystem {
  Configuration cfg;
  std::array<Polynomial, 3> f;
};

MetaSystem meta_system(const Configuration& cfg);

/// Restriction to a coordinate face: the variables in `zero` are set to 0.
struct Restriction {
  std::string label;             // "x=0", "y=0" or "x=y=0"
  std::vector<std::string> zero;
  std::vector<int> colors;       // colors present on the face
  std::vector<Polynomial> polys; // nonzero restricted f_k, in color order
};

/// One entry per nonempty subset of {x, y}.
std::vector<Restriction> boundary_subsystems(const MetaSystem& m);

}  // namespace wronski::polysys
