#pragma once

// Univariate polynomials over Q: Sturm sequences, root counting and exact
// real-root isolation.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wronski/dense.hpp"
#include "wronski/rational.hpp"

namespace wronski::realroots {

/// Dense coefficients, lowest degree first; the zero polynomial has none.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);
  static UnivariatePolynomial from_integers(const dense::Poly<Integer>& p);
  /// prod (x - r) over the given roots.
  static UnivariatePolynomial from_roots(const std::vector<Rational>& roots);
  static UnivariatePolynomial monomial(unsigned degree, const Rational& c = 1);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const;
  Rational coefficient(long k) const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  /// Floating-point evaluation, for plotting and diagnostics only.
  double evaluate(double x) const;

  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  dense::Poly<Integer> primitive_integer() const;
  /// Multiplicity of the root 0.
  unsigned order_at_zero() const;
  /// p(x) -> p(x^k).
  UnivariatePolynomial inflate(unsigned k) const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string to_string(const std::string& var = "t") const;
  nlohmann::json to_json() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};
DivMod divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

// Integer-coefficient helpers (primitive, positive leading coefficient).
dense::Poly<Integer> primitive(dense::Poly<Integer> p);
dense::Poly<Integer> integer_gcd(dense::Poly<Integer> a, dense::Poly<Integer> b);
dense::Poly<Integer> integer_derivative(const dense::Poly<Integer>& p);
dense::Poly<Integer> integer_squarefree(const dense::Poly<Integer>& p);

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// Product of the distinct irreducible factors, monic.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

/// Signed remainder sequence p, p', -rem(...), ... of the squarefree part,
/// as primitive integer polynomials.
std::vector<dense::Poly<Integer>> sturm_sequence(const UnivariatePolynomial& p);

/// Number of distinct real roots in (a, b]; nullopt bounds mean -inf / +inf.
/// Throws DomainError for the zero polynomial or a >= b.
std::size_t sturm_count(const UnivariatePolynomial& p, const std::optional<Rational>& a,
                        const std::optional<Rational>& b);

/// One distinct real root in [lo, hi]; lo == hi iff the root is that
/// rational, in which case `exact` is set.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact = false;
  bool multiplicity_free = true;  // isolation always runs on the squarefree part

  double midpoint() const;
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Power of two strictly larger than the absolute value of every root.
Rational root_bound(const UnivariatePolynomial& p);

/// Sorted, pairwise disjoint, one interval per distinct real root.
std::vector<IsolatingInterval> isolate_real_roots(const UnivariatePolynomial& p);
/// Restricted to roots in (a, b].
std::vector<IsolatingInterval> isolate_real_roots(const UnivariatePolynomial& p, const std::optional<Rational>& a,
                                                  const std::optional<Rational>& b);

/// Bisects until hi - lo < width.
IsolatingInterval refine(const UnivariatePolynomial& p, IsolatingInterval iv, const Rational& width);

/// Least root > 0, refined below width 1e-4.
std::optional<IsolatingInterval> min_positive_real_root(const UnivariatePolynomial& p);

nlohmann::json to_json(const IsolatingInterval& iv);

}  // namespace wronski::realroots
