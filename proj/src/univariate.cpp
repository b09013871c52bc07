#include "wronski/univariate.hpp"

#include "wronski/errors.hpp"

namespace wronski::realroots {

using IPoly = dense::Poly<Integer>;

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  trim();
}

void UnivariatePolynomial::trim() {
  for (auto& x : c_) x.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from_integers(const IPoly& p) {
  std::vector<Rational> c(p.c.begin(), p.c.end());
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::from_roots(const std::vector<Rational>& roots) {
  UnivariatePolynomial p({Rational(1)});
  for (const auto& r : roots) p = p * UnivariatePolynomial({-r, Rational(1)});
  return p;
}

UnivariatePolynomial UnivariatePolynomial::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UnivariatePolynomial(std::move(v));
}

const Rational& UnivariatePolynomial::leading() const {
  if (c_.empty()) throw DomainError("the zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UnivariatePolynomial::coefficient(long k) const {
  return k >= 0 && k < static_cast<long>(c_.size()) ? c_[k] : Rational(0);
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UnivariatePolynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

double UnivariatePolynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (c_.empty()) return *this;
  const Rational lc = c_.back();
  auto c = c_;
  for (auto& x : c) x /= lc;
  return UnivariatePolynomial(std::move(c));
}

IPoly UnivariatePolynomial::primitive_integer() const {
  Integer den = 1;
  for (const auto& x : c_) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> z;
  for (const auto& x : c_) z.push_back(Integer(x.get_num() * (den / x.get_den())));
  return primitive(IPoly(std::move(z)));
}

unsigned UnivariatePolynomial::order_at_zero() const {
  unsigned k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

UnivariatePolynomial UnivariatePolynomial::inflate(unsigned k) const {
  if (c_.empty() || k == 1) return *this;
  std::vector<Rational> v((c_.size() - 1) * k + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UnivariatePolynomial(std::move(c));
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    const Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty())
      out += wronski::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += wronski::to_string(a) + "*" + mono;
  }
  return out;
}

nlohmann::json UnivariatePolynomial::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : c_) j.push_back(wronski::to_string(x));
  return j;
}

DivMod divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> r = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {UnivariatePolynomial(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  const Rational& lb = b.leading();
  for (long k = a.degree() - db; k >= 0; --k) {
    q[k] = r[k + db] / lb;
    if (q[k] == 0) continue;
    for (long i = 0; i <= db; ++i) r[k + i] -= q[k] * b.coefficients()[i];
  }
  r.resize(db);
  return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
}

namespace {

Integer content_of(const IPoly& p) {
  Integer g = 0;
  for (const auto& x : p.c) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

// Divides by the positive content, keeping the sign.
IPoly positive_primitive(IPoly p) {
  if (p.zero()) return p;
  const Integer g = content_of(p);
  if (g != 1)
    for (auto& x : p.c) x = dense::exact_div(x, g);
  return p;
}

int sign_at(const IPoly& p, const Rational& x) {
  if (p.zero()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = p.c.back(), qpow = 1;
  for (long k = p.degree() - 1; k >= 0; --k) {
    qpow *= den;
    acc = acc * num + p.c[k] * qpow;
  }
  return sgn(acc);
}

int sign_at_infinity(const IPoly& p, bool positive) {
  if (p.zero()) return 0;
  const int s = sgn(p.lc());
  return positive || p.degree() % 2 == 0 ? s : -s;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

class Sturm {
 public:
  explicit Sturm(const UnivariatePolynomial& p) : seq_(sturm_sequence(p)) {}

  bool trivial() const { return seq_.empty() || seq_.front().degree() <= 0; }
  const IPoly& squarefree() const { return seq_.front(); }

  std::size_t variations_at(const std::optional<Rational>& x, bool positive_infinity) const {
    std::vector<int> signs;
    for (const auto& q : seq_) signs.push_back(x ? sign_at(q, *x) : sign_at_infinity(q, positive_infinity));
    return variations(signs);
  }

  std::size_t count(const std::optional<Rational>& a, const std::optional<Rational>& b) const {
    if (trivial()) return 0;
    return variations_at(a, false) - variations_at(b, true);
  }

  int sign(const Rational& x) const { return sign_at(seq_.front(), x); }

 private:
  std::vector<IPoly> seq_;
};

// Moves lo to the right until it is not itself a root; the interval keeps
// exactly one root in (lo, hi].
IsolatingInterval settle(const Sturm& s, Rational lo, Rational hi) {
  if (s.sign(hi) == 0) return {hi, hi, true, true};
  for (const Rational& probe : {Rational(0), Rational((lo + hi) / 2)})
    if (lo < probe && probe < hi && s.sign(probe) == 0) return {probe, probe, true, true};
  while (s.sign(lo) == 0) {
    Rational mid = (lo + hi) / 2;
    if (s.count(mid, hi) == 1) {
      lo = mid;
    } else {
      hi = mid;
      if (s.sign(hi) == 0) return {hi, hi, true, true};
    }
  }
  return {lo, hi, false, true};
}

void bisect(const Sturm& s, const Rational& lo, const Rational& hi, std::size_t n,
            std::vector<IsolatingInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back(settle(s, lo, hi));
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const std::size_t left = s.count(lo, mid);
  bisect(s, lo, mid, left, out);
  bisect(s, mid, hi, n - left, out);
}

}  // namespace

IPoly primitive(IPoly p) {
  p = positive_primitive(std::move(p));
  if (!p.zero() && sgn(p.lc()) < 0) p = -p;
  return p;
}

IPoly integer_derivative(const IPoly& p) {
  std::vector<Integer> d;
  for (std::size_t k = 1; k < p.c.size(); ++k) d.push_back(p.c[k] * static_cast<unsigned long>(k));
  return IPoly(std::move(d));
}

namespace {

// Heuristic gcd: evaluate at a large power of two, take the integer gcd and
// read the candidate back from its balanced digits. With the base above
// twice the smaller coefficient bound plus two, a candidate dividing both
// inputs is the gcd.
std::optional<IPoly> heuristic_gcd(const IPoly& a, const IPoly& b) {
  std::size_t bits = std::min(dense::max_bits(a), dense::max_bits(b)) + 3;
  for (int attempt = 0; attempt < 4; ++attempt, bits = 2 * bits + 7) {
    const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const Integer g = gcd(dense::evaluate_at_power_of_two(a, limbs), dense::evaluate_at_power_of_two(b, limbs));
    IPoly candidate = primitive(dense::balanced_digits(g, limbs));
    if (candidate.zero()) continue;
    if (dense::try_divide(a, candidate) && dense::try_divide(b, candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

IPoly integer_gcd(IPoly a, IPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.zero()) return b;
  if (b.zero()) return a;
  if (a.degree() == 0 || b.degree() == 0) return IPoly(Integer(1));
  if (auto g = heuristic_gcd(a, b)) return *g;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.zero()) {
    if (b.degree() == 0) return IPoly(Integer(1));
    IPoly r = primitive(dense::pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IPoly integer_squarefree(const IPoly& p) {
  if (p.degree() <= 0) return primitive(p);
  const IPoly g = integer_gcd(p, integer_derivative(p));
  return primitive(g.degree() == 0 ? p : dense::exact_div(primitive(p), g));
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return UnivariatePolynomial::from_integers(integer_gcd(a.primitive_integer(), b.primitive_integer())).monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.is_zero()) return p;
  return UnivariatePolynomial::from_integers(integer_squarefree(p.primitive_integer())).monic();
}

std::vector<IPoly> sturm_sequence(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw DomainError("identically zero");
  std::vector<IPoly> seq{integer_squarefree(p.primitive_integer())};
  if (seq.front().degree() <= 0) return seq;
  seq.push_back(positive_primitive(integer_derivative(seq.front())));
  while (seq.back().degree() > 0) {
    const IPoly& a = seq[seq.size() - 2];
    const IPoly& b = seq.back();
    IPoly r = dense::pseudo_remainder(a, b);
    // prem = lc(b)^e * rem with e = deg a - deg b + 1.
    const long e = a.degree() - b.degree() + 1;
    const bool flip = sgn(b.lc()) < 0 && (e % 2 == 1);
    if (!flip) r = -r;
    if (r.zero()) break;
    seq.push_back(positive_primitive(std::move(r)));
  }
  return seq;
}

std::size_t sturm_count(const UnivariatePolynomial& p, const std::optional<Rational>& a,
                        const std::optional<Rational>& b) {
  if (p.is_zero()) throw DomainError("identically zero");
  if (a && b && *a >= *b) throw DomainError("empty interval: need a < b");
  return Sturm(p).count(a, b);
}

double IsolatingInterval::midpoint() const { return to_double((lo + hi) / 2); }

Rational root_bound(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw DomainError("identically zero");
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (long k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coefficients()[k]) / lc));
  Rational bound = 1;
  while (bound <= m + 1) bound *= 2;
  return bound;
}

std::vector<IsolatingInterval> isolate_real_roots(const UnivariatePolynomial& p) {
  return isolate_real_roots(p, std::nullopt, std::nullopt);
}

std::vector<IsolatingInterval> isolate_real_roots(const UnivariatePolynomial& p, const std::optional<Rational>& a,
                                                  const std::optional<Rational>& b) {
  if (p.is_zero()) throw DomainError("identically zero");
  std::vector<IsolatingInterval> out;
  const Sturm s(p);
  if (s.trivial()) return out;
  const Rational m = root_bound(p);
  const Rational lo = a ? std::max(*a, Rational(-m)) : Rational(-m);
  const Rational hi = b ? std::min(*b, m) : m;
  if (lo >= hi) return out;
  bisect(s, lo, hi, s.count(lo, hi), out);
  // Adjacent intervals may share an endpoint that is not a root; pull the
  // later one's left end inward so that the closed intervals are disjoint.
  for (std::size_t k = 1; k < out.size(); ++k) {
    auto& iv = out[k];
    while (!iv.exact && iv.lo <= out[k - 1].hi) {
      const Rational mid = (iv.lo + iv.hi) / 2;
      if (s.count(mid, iv.hi) == 1) {
        iv.lo = mid;
      } else {
        iv.hi = mid;
        if (s.sign(mid) == 0) iv = {mid, mid, true, true};
      }
    }
  }
  return out;
}

IsolatingInterval refine(const UnivariatePolynomial& p, IsolatingInterval iv, const Rational& width) {
  if (iv.exact) return iv;
  const IPoly sq = integer_squarefree(p.primitive_integer());
  const int sl = sign_at(sq, iv.lo);
  while (iv.hi - iv.lo >= width) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int sm = sign_at(sq, mid);
    if (sm == 0) return {mid, mid, true, true};
    if (sm == sl)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

std::optional<IsolatingInterval> min_positive_real_root(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw DomainError("identically zero");
  const auto roots = isolate_real_roots(p, Rational(0), std::nullopt);
  if (roots.empty()) return std::nullopt;
  return refine(p, roots.front(), Rational(1, 10000));
}

nlohmann::json to_json(const IsolatingInterval& iv) {
  return {{"lo", wronski::to_string(iv.lo)},
          {"hi", wronski::to_string(iv.hi)},
          {"exact", iv.exact},
          {"approx", iv.midpoint()}};
}

}  // namespace wronski::realroots
