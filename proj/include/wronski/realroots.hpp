#pragma once

// Resultants of sparse polynomials, real intersection counts of plane curve
// pairs, and elimination of the meta-system down to a polynomial in t.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "wronski/polynomial.hpp"
#include "wronski/polysys.hpp"
#include "wronski/univariate.hpp"

namespace wronski::realroots {

using poly::Polynomial;

/// Sylvester resultant eliminating `var`, by subresultant sequences over the
/// integers. Supports up to four variables. Throws DomainError when both
/// inputs have degree 0 in `var`; returns 0 if either is zero.
Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& var);

/// Determinant of the Sylvester matrix by cofactor expansion (reference
/// implementation for small degrees).
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, const std::string& var);

struct IntersectionCount {
  std::size_t count = 0;  // distinct real intersection points
  long total = 0;         // complex intersections with multiplicity
  long shear = 0;         // x <- x + shear * y
  UnivariatePolynomial projection;  // Res_y after the shear, in the sheared x
  std::vector<IsolatingInterval> roots;
  std::vector<std::pair<double, double>> points;  // approximate, original coordinates
};

/// f, g over two variables (x, y). Tries the identity and then up to eight
/// seeded random shears until both leading coefficients in y are constant
/// and Res_y is nonzero and squarefree. Throws DegenerateInstance otherwise.
IntersectionCount count_real_intersections(const Polynomial& f, const Polynomial& g, std::uint64_t seed = 0,
                                           bool with_points = false);

struct ProjectionRecord {
  std::string label;       // e.g. "pivot f0"
  long degree_raw = -1;    // in t; -1 when the iterated resultant vanished
  long t_power = 0;
};

struct EliminationResult {
  UnivariatePolynomial E;              // squarefree, in t, t-power and content removed
  std::pair<long, long> shear_used{0, 0};
  unsigned t_power_removed = 0;
  bool squarefree = true;
  long degree_raw = 0;                 // f0-pivot iterated resultant, in t
  unsigned compression = 1;            // E depends on t only through t^compression
  std::vector<ProjectionRecord> projections;
  UnivariatePolynomial f0_pivot;       // squarefree part before pruning
};

struct EliminationOptions {
  std::uint64_t seed = 0;
  bool prune = true;            // gcd with the f1- and f2-pivot eliminants
  bool strip_monomials = false; // divide each f_k by its x- and y-monomial content
};

/// E(t) = Res_y(Res_x(f0, f1), Res_x(f0, f2)) with t-power and content
/// removed, pruned by gcd with the other pivots, squarefree. E is a multiple
/// of the eliminant of the system, so no real root of E in an interval
/// excludes real solutions with t there. Retries up to eight random
/// determinant-one changes of (x, y) when the result vanishes; throws
/// EliminationFailure("extraneous component suspected") after that.
EliminationResult eliminate_to_t(const polysys::MetaSystem& m, const EliminationOptions& options = {});

/// Eliminant of the torus part of the system in x or y (t and the other
/// coordinate eliminated), x- and y-powers removed.
UnivariatePolynomial project_to(const polysys::MetaSystem& m, const std::string& var, std::uint64_t seed = 0);

struct BoundaryReport {
  std::string label;
  bool empty = false;  // no solution with t != 0 on this face
  std::string reason;
  std::optional<UnivariatePolynomial> eliminant;
  std::vector<IsolatingInterval> real_roots;
};

std::vector<BoundaryReport> boundary_check(const polysys::MetaSystem& m);

/// Decides whether the meta-system has no real solution with t in (lo, hi]
/// and t != 0. Tries the t-eliminant first, then the x- and y-projections,
/// and checks the coordinate faces separately.
struct EmptinessCertificate {
  bool certified = false;
  std::string method;
  EliminationResult elimination;
  std::vector<IsolatingInterval> t_roots;  // real roots of E in the range
  std::optional<UnivariatePolynomial> projection;
  std::vector<BoundaryReport> boundary;
};

EmptinessCertificate certify_no_real_solutions(const polysys::MetaSystem& m, const std::optional<Rational>& lo,
                                               const std::optional<Rational>& hi, std::uint64_t seed = 0);

nlohmann::json to_json(const EliminationResult& r);
nlohmann::json to_json(const BoundaryReport& r);

}  // namespace wronski::realroots
