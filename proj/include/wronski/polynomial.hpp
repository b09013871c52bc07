#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "wronski/rational.hpp"

namespace wronski::poly {

using Exponents = std::vector<std::uint32_t>;

/// Polynomial over Q in a fixed, ordered list of variables. Terms are kept
/// in descending lexicographic exponent order and never store zeros.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, const std::string& name);
  static Polynomial monomial(std::vector<std::string> variables, Exponents e, const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Throws DomainError for unknown names.
  std::size_t var_index(const std::string& name) const;

  /// -1 for the zero polynomial.
  long degree(const std::string& var) const;
  long total_degree() const;
  /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
  long min_degree(const std::string& var) const;
  std::vector<Exponents> support() const;

  /// Adds a term, merging with an existing one.
  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator+(Polynomial a, const Rational& c) { return a += constant(a.vars_, c); }
  friend Polynomial operator-(Polynomial a, const Rational& c) { return a -= constant(a.vars_, c); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned n) const;

  /// Every variable must be bound; throws DomainError otherwise.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Binds the listed variables and keeps the variable list.
  Polynomial specialize(const std::map<std::string, Rational>& values) const;
  /// var <- value; `value` must share this variable list.
  Polynomial substitute(const std::string& var, const Polynomial& value) const;
  Polynomial derivative(const std::string& var) const;

  /// Positive rational c with (this / c) integral and primitive; 0 for zero.
  Rational content() const;
  /// this / content, with positive leading coefficient.
  Polynomial primitive_part() const;

  /// Coefficient of var^k, as a polynomial not involving var.
  Polynomial coefficient(const std::string& var, unsigned k) const;
  /// Divides every term by var^k (requires min_degree(var) >= k).
  Polynomial shift_down(const std::string& var, unsigned k) const;

  /// Same polynomial over another variable list that contains all variables
  /// actually occurring in it.
  Polynomial with_variables(const std::vector<std::string>& variables) const;

  /// e.g. "3*t^3*x*y - x + 1/2"
  std::string to_string() const;
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  void require_same_variables(const Polynomial& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace wronski::poly
