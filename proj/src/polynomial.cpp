#include "wronski/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "wronski/errors.hpp"

namespace wronski::poly {

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::int32_t>::max() - b) throw DomainError("exponent overflow");
  return a + b;
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t a = 0; a < vars_.size(); ++a)
    for (std::size_t b = a + 1; b < vars_.size(); ++b)
      if (vars_[a] == vars_[b]) throw DomainError("duplicate variable name '" + vars_[a] + "'");
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, const std::string& name) {
  Polynomial p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents e, const Rational& c) {
  Polynomial p(std::move(variables));
  if (e.size() != p.vars_.size()) throw DomainError("exponent vector length does not match variables");
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](auto e) { return e == 0; }));
}

std::size_t Polynomial::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

long Polynomial::degree(const std::string& var) const {
  const auto k = var_index(var);
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[k]);
  return d;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

long Polynomial::min_degree(const std::string& var) const {
  const auto k = var_index(var);
  if (terms_.empty()) return 0;
  long d = std::numeric_limits<long>::max();
  for (const auto& [e, c] : terms_) d = std::min<long>(d, e[k]);
  return d;
}

std::vector<Exponents> Polynomial::support() const {
  std::vector<Exponents> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw DomainError("exponent vector length does not match variables");
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_variables(const Polynomial& o) const {
  if (vars_ != o.vars_) throw DomainError("polynomials over different variable lists");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_variables(b);
  Polynomial r(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = checked_add(ea[k], eb[k]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [e, v] : terms_) v *= k;
  return *this;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(vars_, 1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw DomainError("no value bound for variable '" + v + "'");
    values.push_back(it->second);
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) term *= wronski::pow(values[k], e[k]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::specialize(const std::map<std::string, Rational>& values) const {
  std::vector<std::pair<std::size_t, Rational>> bound;
  for (const auto& [name, v] : values) bound.emplace_back(var_index(name), v);
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    Rational v = c;
    for (const auto& [k, x] : bound) {
      if (f[k]) v *= wronski::pow(x, f[k]);
      f[k] = 0;
    }
    r.add_term(f, v);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
  require_same_variables(value);
  const auto k = var_index(var);
  // Group by the power of var, then Horner in `value`.
  std::map<std::uint32_t, Polynomial> by_power;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[k] = 0;
    auto [it, _] = by_power.try_emplace(e[k], Polynomial(vars_));
    it->second.add_term(f, c);
  }
  Polynomial result(vars_);
  std::uint32_t current = by_power.empty() ? 0 : by_power.rbegin()->first;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
    result = result * value.pow(current - it->first) + it->second;
    current = it->first;
  }
  return result * value.pow(current);
}

Polynomial Polynomial::derivative(const std::string& var) const {
  const auto k = var_index(var);
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents f = e;
    --f[k];
    r.add_term(f, c * e[k]);
  }
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 0;
  Integer num = 0, den = 1;
  for (const auto& [e, c] : terms_) {
    num = gcd(num, Integer(c.get_num()));
    den = lcm(den, Integer(c.get_den()));
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (terms_.begin()->second < 0) c = -c;
  Polynomial r = *this;
  r *= Rational(1) / c;
  return r;
}

Polynomial Polynomial::coefficient(const std::string& var, unsigned k) const {
  const auto idx = var_index(var);
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[idx] == k) {
      Exponents f = e;
      f[idx] = 0;
      r.add_term(f, c);
    }
  return r;
}

Polynomial Polynomial::shift_down(const std::string& var, unsigned k) const {
  const auto idx = var_index(var);
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] < k) throw DomainError("shift_down would create a negative exponent");
    Exponents f = e;
    f[idx] -= k;
    r.add_term(f, c);
  }
  return r;
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& variables) const {
  Polynomial r(variables);
  std::vector<std::size_t> target(vars_.size(), variables.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = std::find(variables.begin(), variables.end(), vars_[k]);
    if (it != variables.end()) target[k] = static_cast<std::size_t>(it - variables.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (target[k] == variables.size())
        throw DomainError("variable '" + vars_[k] + "' occurs but is missing from the target list");
      f[target[k]] = e[k];
    }
    r.add_term(f, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    const Rational a = abs(c);
    std::string coeff = wronski::to_string(a);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mono.empty())
      out += coeff;
    else if (a == 1)
      out += mono;
    else
      out += coeff + "*" + mono;
    first = false;
  }
  return out;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exponents", e}, {"coefficient", wronski::to_string(c)}});
  return {{"variables", vars_}, {"terms", terms}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  try {
    Polynomial p(j.at("variables").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("coefficient");
      p.add_term(t.at("exponents").get<Exponents>(),
                 c.is_string() ? parse_rational(c.get<std::string>()) : parse_rational(c.dump()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed polynomial: ") + e.what());
  }
}

}  // namespace wronski::poly
