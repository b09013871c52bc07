#include "wronski/dense.hpp"

#include <algorithm>
#include <cstring>

namespace wronski::dense {

namespace {

constexpr std::size_t kKroneckerThreshold = 12;

// Packs the coefficients of one sign into slots of `limbs` limbs each.
Integer pack(const Poly<Integer>& p, std::size_t limbs, int sign) {
  const bool fits = std::all_of(p.c.begin(), p.c.end(), [&](const Integer& z) { return mpz_size(z.get_mpz_t()) <= limbs; });
  if (!fits) {
    Integer out, term;
    for (std::size_t k = p.c.size(); k-- > 0;) {
      mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), limbs * GMP_NUMB_BITS);
      if (sgn(p.c[k]) == sign) out += sign > 0 ? p.c[k] : Integer(-p.c[k]);
    }
    return out;
  }
  std::vector<mp_limb_t> buf(p.c.size() * limbs, 0);
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    const mpz_srcptr z = p.c[k].get_mpz_t();
    if (mpz_sgn(z) != sign) continue;
    std::memcpy(buf.data() + k * limbs, mpz_limbs_read(z), mpz_size(z) * sizeof(mp_limb_t));
  }
  while (!buf.empty() && buf.back() == 0) buf.pop_back();
  Integer out;
  if (buf.empty()) return out;
  mp_limb_t* w = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(buf.size()));
  std::memcpy(w, buf.data(), buf.size() * sizeof(mp_limb_t));
  mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(buf.size()));
  return out;
}

Poly<Integer> kronecker(const Poly<Integer>& a, const Poly<Integer>& b) {
  const std::size_t terms = std::min(a.c.size(), b.c.size());
  std::size_t extra = 2;
  while ((std::size_t(1) << (extra - 2)) < terms) ++extra;
  const std::size_t bits = max_bits(a) + max_bits(b) + extra;
  const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  return balanced_digits(evaluate_at_power_of_two(a, limbs) * evaluate_at_power_of_two(b, limbs), limbs);
}

}  // namespace

std::size_t max_bits(const Poly<Integer>& p) {
  std::size_t b = 0;
  for (const auto& x : p.c) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

Integer evaluate_at_power_of_two(const Poly<Integer>& p, std::size_t limbs) {
  return pack(p, limbs, 1) - pack(p, limbs, -1);
}

Poly<Integer> balanced_digits(const Integer& v, std::size_t limbs) {
  const int sign = sgn(v);
  const mpz_srcptr vz = v.get_mpz_t();
  const std::size_t have = mpz_size(vz);
  const mp_limb_t* data = mpz_limbs_read(vz);
  std::vector<Integer> out;
  Integer half, full;
  mpz_setbit(half.get_mpz_t(), limbs * GMP_NUMB_BITS - 1);
  mpz_setbit(full.get_mpz_t(), limbs * GMP_NUMB_BITS);
  bool carry = false;
  for (std::size_t start = 0; start < have || carry; start += limbs) {
    Integer u;
    if (start < have) {
      const std::size_t len = std::min(limbs, have - start);
      mp_limb_t* w = mpz_limbs_write(u.get_mpz_t(), static_cast<mp_size_t>(len));
      std::memcpy(w, data + start, len * sizeof(mp_limb_t));
      mpz_limbs_finish(u.get_mpz_t(), static_cast<mp_size_t>(len));
    }
    if (carry) ++u;
    carry = u >= half;
    if (carry) u -= full;
    if (sign < 0) u = -u;
    out.push_back(std::move(u));
  }
  return Poly<Integer>(std::move(out));
}

Poly<Integer> multiply(const Poly<Integer>& a, const Poly<Integer>& b) {
  if (a.zero() || b.zero()) return {};
  if (std::min(a.c.size(), b.c.size()) >= kKroneckerThreshold) return kronecker(a, b);
  std::vector<Integer> out(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
  }
  return Poly<Integer>(std::move(out));
}

std::optional<Poly<Integer>> try_divide(const Poly<Integer>& a, const Poly<Integer>& b) {
  if (b.zero()) return std::nullopt;
  if (a.zero()) return Poly<Integer>();
  if (a.degree() < b.degree()) return std::nullopt;
  const long db = b.degree();
  std::vector<Integer> r = a.c, q(a.degree() - db + 1);
  for (long k = a.degree() - db; k >= 0; --k) {
    if (sgn(r[k + db]) == 0) continue;
    if (!mpz_divisible_p(r[k + db].get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), r[k + db].get_mpz_t(), b.lc().get_mpz_t());
    for (long i = 0; i <= db; ++i) mpz_submul(r[k + i].get_mpz_t(), q[k].get_mpz_t(), b.c[i].get_mpz_t());
  }
  for (const auto& x : r)
    if (sgn(x) != 0) return std::nullopt;
  return Poly<Integer>(std::move(q));
}

}  // namespace wronski::dense
