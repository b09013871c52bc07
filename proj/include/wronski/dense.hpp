#pragma once

// Dense recursive polynomials over the integers (Z[x], Z[x][y], ...) and the
// subresultant resultant over any of these rings.

#include <algorithm>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wronski/rational.hpp"

namespace wronski::dense {

template <class R>
struct Poly;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class R>
struct Ring;

template <>
struct Ring<Integer> {
  static Integer one() { return 1; }
  static Integer zero() { return 0; }
};

/// c[k] is the coefficient of X^k; trailing zeros are never stored.
template <class R>
struct Poly {
  std::vector<R> c;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit Poly(R constant) {
    if (!is_zero(constant)) c.push_back(std::move(constant));
  }

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const R& lc() const { return c.back(); }
  R at(long k) const { return k >= 0 && k < static_cast<long>(c.size()) ? c[k] : Ring<R>::zero(); }
  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  friend bool operator==(const Poly&, const Poly&) = default;
};

template <class R>
struct Ring<Poly<R>> {
  static Poly<R> one() { return Poly<R>(Ring<R>::one()); }
  static Poly<R> zero() { return Poly<R>(); }
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.zero();
}

template <class R>
Poly<R> operator-(Poly<R> a) {
  for (auto& x : a.c) x = -x;
  return a;
}

template <class R>
Poly<R> operator+(Poly<R> a, const Poly<R>& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Ring<R>::zero());
  for (std::size_t k = 0; k < b.c.size(); ++k) a.c[k] = a.c[k] + b.c[k];
  a.trim();
  return a;
}

template <class R>
Poly<R> operator-(Poly<R> a, const Poly<R>& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Ring<R>::zero());
  for (std::size_t k = 0; k < b.c.size(); ++k) a.c[k] = a.c[k] - b.c[k];
  a.trim();
  return a;
}

Poly<Integer> multiply(const Poly<Integer>& a, const Poly<Integer>& b);

/// Largest coefficient bit length.
std::size_t max_bits(const Poly<Integer>& p);
/// p(2^(GMP_NUMB_BITS * limbs)).
Integer evaluate_at_power_of_two(const Poly<Integer>& p, std::size_t limbs);
/// Inverse of the above for coefficients of absolute value below half the base.
Poly<Integer> balanced_digits(const Integer& v, std::size_t limbs);
/// a / b if b divides a over the integers.
std::optional<Poly<Integer>> try_divide(const Poly<Integer>& a, const Poly<Integer>& b);

template <class R>
Poly<R> multiply(const Poly<R>& a, const Poly<R>& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<R> out(a.c.size() + b.c.size() - 1, Ring<R>::zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
  }
  return Poly<R>(std::move(out));
}

template <class R>
Poly<R> operator*(const Poly<R>& a, const Poly<R>& b) {
  return multiply(a, b);
}

template <class R>
Poly<R> scale(Poly<R> a, const R& s) {
  if (is_zero(s)) return {};
  for (auto& x : a.c) x = x * s;
  return a;
}

template <class R>
R power(const R& base, long n) {
  R result = Ring<R>::one(), b = base;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return result;
}

/// a / b where b divides a exactly; throws std::logic_error otherwise.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) throw std::logic_error("division by the zero polynomial");
  if (a.zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
  const long db = b.degree();
  std::vector<R> r = a.c, q(a.degree() - db + 1, Ring<R>::zero());
  for (long k = a.degree() - db; k >= 0; --k) {
    if (is_zero(r[k + db])) continue;
    q[k] = exact_div(r[k + db], b.lc());
    for (long i = 0; i <= db; ++i) r[k + i] = r[k + i] - q[k] * b.c[i];
  }
  for (const auto& x : r)
    if (!is_zero(x)) throw std::logic_error("inexact polynomial division");
  return Poly<R>(std::move(q));
}

template <class R>
Poly<R> exact_div_scalar(Poly<R> a, const R& s) {
  for (auto& x : a.c) x = exact_div(x, s);
  return a;
}

/// lc(B)^(deg A - deg B + 1) * A mod B.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& A, const Poly<R>& B) {
  const long dB = B.degree();
  long e = A.degree() - dB + 1;
  if (e <= 0) return A;
  std::vector<R> r = A.c;
  long top = A.degree();
  const R& lb = B.lc();
  while (top >= dB) {
    if (is_zero(r[top])) {
      --top;
      --e;
      for (long k = 0; k <= top; ++k) r[k] = r[k] * lb;
      continue;
    }
    const R lr = r[top];
    const long shift = top - dB;
    for (long k = 0; k < top; ++k) r[k] = r[k] * lb;
    for (long i = 0; i < dB; ++i) r[shift + i] = r[shift + i] - lr * B.c[i];
    r[top] = Ring<R>::zero();
    --top;
    --e;
  }
  r.resize(std::max<long>(top + 1, 0));
  Poly<R> out(std::move(r));
  if (e > 0) out = scale(out, power(lb, e));
  return out;
}

/// Resultant of A and B with respect to the main variable, by subresultant
/// pseudo-remainder sequences. Both constant: returns one.
template <class R>
R resultant(Poly<R> A, Poly<R> B) {
  if (A.zero() || B.zero()) return Ring<R>::zero();
  bool negate = false;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) negate = true;
  }
  if (B.degree() == 0) {
    R r = power(B.lc(), A.degree());
    if (negate) r = -r;
    return r;
  }
  R g = Ring<R>::one(), h = Ring<R>::one();
  while (true) {
    const long d = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) negate = !negate;
    Poly<R> rem = pseudo_remainder(A, B);
    A = std::move(B);
    B = exact_div_scalar(std::move(rem), R(g * power(h, d)));
    g = A.lc();
    if (d == 1)
      h = g;
    else if (d > 1)
      h = exact_div(power(g, d), power(h, d - 1));
    if (B.zero()) return Ring<R>::zero();
    if (B.degree() == 0) break;
  }
  const long da = A.degree();
  R r = da == 1 ? B.lc() : exact_div(power(B.lc(), da), power(h, da - 1));
  if (negate) r = -r;
  return r;
}

}  // namespace wronski::dense
