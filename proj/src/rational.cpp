#include "wronski/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "wronski/errors.hpp"

namespace wronski {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational literal");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw DomainError("malformed rational literal: " + std::string(text));
    Integer n{std::string(num), 10}, d{std::string(den), 10};
    if (d == 0) throw DomainError("zero denominator: " + std::string(text));
    value = Rational(n, d);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = std::string(body.substr(e + 1));
      std::string_view exp_digits = exp_text;
      bool exp_negative = false;
      if (!exp_digits.empty() && (exp_digits.front() == '+' || exp_digits.front() == '-')) {
        exp_negative = exp_digits.front() == '-';
        exp_digits.remove_prefix(1);
      }
      if (!all_digits(exp_digits) || exp_digits.size() > 6)
        throw DomainError("malformed exponent: " + std::string(text));
      exponent = std::stol(std::string(exp_digits));
      if (exp_negative) exponent = -exponent;
      body = body.substr(0, e);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      auto ip = body.substr(0, dot);
      auto fp = body.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
          (ip.empty() && fp.empty()))
        throw DomainError("malformed decimal literal: " + std::string(text));
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(body)) throw DomainError("malformed number: " + std::string(text));
      digits = std::string(body);
    }
    Integer n(digits, 10);
    long shift = exponent - frac_len;
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
      value = Rational(n * ten_pow);
    else
      value = Rational(n, ten_pow);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

double to_double(const Rational& q) {
  // mpq_get_d truncates and misbehaves for huge operands; go through mpfr-free
  // exponent scaling instead.
  if (q == 0) return 0.0;
  long num_exp = 0, den_exp = 0;
  double num = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  double den = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  long e = num_exp - den_exp;
  if (e > std::numeric_limits<double>::max_exponent + 2)
    return num > 0 ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
  if (e < std::numeric_limits<double>::min_exponent - 60) return 0.0;
  return std::ldexp(num / den, static_cast<int>(e));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;  // already canonical: powers of coprime integers stay coprime
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value cannot be rationalized");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

}  // namespace wronski
