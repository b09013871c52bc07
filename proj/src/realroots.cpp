#include "wronski/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "wronski/errors.hpp"

namespace wronski::realroots {

namespace {

using IPoly = dense::Poly<Integer>;
using P2 = dense::Poly<IPoly>;
using P3 = dense::Poly<P2>;

template <int N>
struct Nest {
  using type = dense::Poly<typename Nest<N - 1>::type>;
};
template <>
struct Nest<0> {
  using type = Integer;
};

template <int N>
void insert(typename Nest<N>::type& p, const std::uint32_t* e, const Integer& c) {
  if constexpr (N == 0) {
    p += c;
  } else {
    using Inner = typename Nest<N - 1>::type;
    if (p.c.size() <= e[0]) p.c.resize(e[0] + 1, dense::Ring<Inner>::zero());
    insert<N - 1>(p.c[e[0]], e + 1, c);
  }
}

template <int N>
void normalize(typename Nest<N>::type& p) {
  if constexpr (N > 0) {
    for (auto& x : p.c) normalize<N - 1>(x);
    p.trim();
  }
}

template <int N, class F>
void for_each_term(const typename Nest<N>::type& p, std::vector<std::uint32_t>& e, std::size_t level, F&& f) {
  if constexpr (N == 0) {
    if (sgn(p) != 0) f(e, p);
  } else {
    for (std::size_t k = 0; k < p.c.size(); ++k) {
      e[level] = static_cast<std::uint32_t>(k);
      for_each_term<N - 1>(p.c[k], e, level + 1, f);
    }
  }
}

// p must have integral coefficients. `order` lists variable indices from the
// outermost (main) variable inwards; all other variables must be absent.
// Exponents of variable `order[k]` are divided by divisors[k].
template <int N>
typename Nest<N>::type to_dense(const Polynomial& p, const std::vector<std::size_t>& order,
                                const std::vector<std::uint32_t>& divisors = {}) {
  typename Nest<N>::type out{};
  std::vector<std::uint32_t> e(N);
  for (const auto& [exps, c] : p.terms()) {
    if (c.get_den() != 1) throw std::logic_error("to_dense needs integral coefficients");
    std::size_t used = 0;
    for (std::size_t k = 0; k < N; ++k) {
      e[k] = exps[order[k]];
      used += exps[order[k]];
      if (!divisors.empty() && divisors[k] > 1) {
        if (e[k] % divisors[k]) throw std::logic_error("exponent not divisible by compression");
        e[k] /= divisors[k];
      }
    }
    std::size_t all = 0;
    for (auto x : exps) all += x;
    if (all != used) throw std::logic_error("polynomial involves a variable outside the dense order");
    insert<N>(out, e.data(), Integer(c.get_num()));
  }
  normalize<N>(out);
  return out;
}

template <int N>
Polynomial from_dense(const typename Nest<N>::type& p, const std::vector<std::string>& vars,
                      const std::vector<std::size_t>& order) {
  Polynomial out(vars);
  std::vector<std::uint32_t> e(N);
  for_each_term<N>(p, e, 0, [&](const std::vector<std::uint32_t>& ex, const Integer& c) {
    poly::Exponents full(vars.size(), 0);
    for (std::size_t k = 0; k < N; ++k) full[order[k]] = ex[k];
    out.add_term(full, Rational(c));
  });
  return out;
}

// (content, primitive integral polynomial) with p = content * primitive.
std::pair<Rational, Polynomial> integral_form(const Polynomial& p) {
  const Rational c = p.content();
  Polynomial q = p;
  q *= Rational(1) / c;
  return {c, q};
}

UnivariatePolynomial to_univariate(const Polynomial& p, const std::string& var) {
  const auto k = p.var_index(var);
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k && e[i] != 0) throw std::logic_error("polynomial is not univariate in " + var);
    if (c.size() <= e[k]) c.resize(e[k] + 1, Rational(0));
    c[e[k]] = v;
  }
  return UnivariatePolynomial(std::move(c));
}

template <int N>
Polynomial resultant_n(const Polynomial& f, const Polynomial& g, std::size_t k) {
  const auto& vars = f.variables();
  std::vector<std::size_t> order{k}, rest;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (i != k) {
      order.push_back(i);
      rest.push_back(i);
    }
  const auto [cf, F] = integral_form(f);
  const auto [cg, G] = integral_form(g);
  const auto df = to_dense<N>(F, order);
  const auto dg = to_dense<N>(G, order);
  const auto r = dense::resultant(df, dg);
  Polynomial out = from_dense<N - 1>(r, vars, rest);
  out *= pow(cf, static_cast<unsigned>(dg.degree())) * pow(cg, static_cast<unsigned>(df.degree()));
  return out;
}

IPoly strip_order(const IPoly& p, long* order = nullptr) {
  std::size_t k = 0;
  while (k < p.c.size() && sgn(p.c[k]) == 0) ++k;
  if (order) *order = static_cast<long>(k);
  return IPoly(std::vector<Integer>(p.c.begin() + static_cast<long>(k), p.c.end()));
}

// Res_y(Res_x(a, b), Res_x(a, c)) for a, b, c in Z[s][y][x] (x outermost).
// Returns the zero polynomial when the chain degenerates.
IPoly iterated_resultant(const P3& a, const P3& b, const P3& c) {
  if (a.degree() <= 0 || b.zero() || c.zero()) return {};
  const P2 r1 = dense::resultant(a, b);
  const P2 r2 = dense::resultant(a, c);
  if (r1.zero() || r2.zero()) return {};
  if (r1.degree() == 0 && r2.degree() == 0) return integer_gcd(r1.c[0], r2.c[0]);
  return dense::resultant(r1, r2);
}

Polynomial strip_variable(const Polynomial& p, const std::string& var) {
  const long k = p.min_degree(var);
  return k > 0 ? p.shift_down(var, static_cast<unsigned>(k)) : p;
}

std::uint32_t t_exponent_gcd(const std::vector<Polynomial>& ps, std::size_t t_index) {
  std::uint32_t g = 0;
  for (const auto& p : ps)
    for (const auto& [e, c] : p.terms()) g = std::gcd(g, e[t_index]);
  return g == 0 ? 1 : g;
}

// (x, y) -> (x + a y, y) followed by (x, y) -> (x, y + b x).
Polynomial change_coordinates(const Polynomial& p, long a, long b) {
  const auto& vars = p.variables();
  Polynomial out = p;
  const auto x = Polynomial::variable(vars, "x");
  const auto y = Polynomial::variable(vars, "y");
  if (a != 0) out = out.substitute("x", x + Rational(a) * y);
  if (b != 0) out = out.substitute("y", y + Rational(b) * x);
  return out;
}

std::vector<Polynomial> prepared(const polysys::MetaSystem& m, bool strip_monomials) {
  std::vector<Polynomial> h;
  for (int k = 0; k < 3; ++k) {
    if (m.f[k].is_zero()) throw DomainError("color class " + std::to_string(k) + " is empty");
    Polynomial p = integral_form(m.f[k]).second;
    p = strip_variable(p, "t");
    if (strip_monomials) p = strip_variable(strip_variable(p, "x"), "y");
    h.push_back(std::move(p));
  }
  return h;
}

// Combines nonzero projections: gcd of their stripped primitive parts.
IPoly combine(const std::vector<IPoly>& ps) {
  IPoly g;
  for (const auto& p : ps) {
    if (p.zero()) continue;
    const IPoly q = primitive(strip_order(p));
    g = g.zero() ? q : integer_gcd(g, q);
  }
  return g;
}

}  // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& var) {
  if (f.variables() != g.variables()) throw DomainError("polynomials over different variable lists");
  const auto k = f.var_index(var);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.variables());
  if (f.degree(var) == 0 && g.degree(var) == 0) throw DomainError("both polynomials have degree 0 in " + var);
  switch (f.variables().size()) {
    case 1:
      return resultant_n<1>(f, g, k);
    case 2:
      return resultant_n<2>(f, g, k);
    case 3:
      return resultant_n<3>(f, g, k);
    case 4:
      return resultant_n<4>(f, g, k);
    default:
      throw DomainError("resultant supports at most four variables");
  }
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, const std::string& var) {
  if (f.variables() != g.variables()) throw DomainError("polynomials over different variable lists");
  const auto& vars = f.variables();
  if (f.is_zero() || g.is_zero()) return Polynomial(vars);
  const long m = f.degree(var), n = g.degree(var);
  if (m == 0 && n == 0) throw DomainError("both polynomials have degree 0 in " + var);
  const long size = m + n;
  std::vector<std::vector<Polynomial>> a(size, std::vector<Polynomial>(size, Polynomial(vars)));
  for (long r = 0; r < n; ++r)
    for (long k = 0; k <= m; ++k) a[r][r + k] = f.coefficient(var, static_cast<unsigned>(m - k));
  for (long r = 0; r < m; ++r)
    for (long k = 0; k <= n; ++k) a[n + r][r + k] = g.coefficient(var, static_cast<unsigned>(n - k));

  // Laplace expansion along rows, memoized on the set of remaining columns.
  std::vector<std::map<unsigned, Polynomial>> memo(size + 1);
  std::function<Polynomial(long, unsigned)> det = [&](long row, unsigned cols) -> Polynomial {
    if (row == size) return Polynomial::constant(vars, 1);
    auto it = memo[row].find(cols);
    if (it != memo[row].end()) return it->second;
    Polynomial sum(vars);
    int position = 0;
    for (long c = 0; c < size; ++c) {
      if (!(cols >> c & 1u)) continue;
      if (!a[row][c].is_zero()) {
        Polynomial term = a[row][c] * det(row + 1, cols & ~(1u << c));
        if (position % 2) term = -term;
        sum += term;
      }
      ++position;
    }
    memo[row].emplace(cols, sum);
    return sum;
  };
  return det(0, (1u << size) - 1);
}

IntersectionCount count_real_intersections(const Polynomial& f, const Polynomial& g, std::uint64_t seed,
                                           bool with_points) {
  if (f.variables() != g.variables() || f.variables().size() != 2)
    throw DomainError("intersection counting needs two polynomials in the same two variables");
  if (f.is_zero() || g.is_zero()) throw DomainError("zero polynomial has no finite intersection");
  if (f.is_constant() || g.is_constant()) return {};
  const auto& vars = f.variables();
  const std::string& X = vars[0];
  const std::string& Y = vars[1];
  const auto x = Polynomial::variable(vars, X);
  const auto y = Polynomial::variable(vars, Y);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> magnitude(1, 16);
  bool non_finite = false;
  for (int attempt = 0; attempt <= 8; ++attempt) {
    long s = 0;
    if (attempt > 0) {
      s = magnitude(rng);
      if (rng() & 1) s = -s;
    }
    const Polynomial fs = s ? f.substitute(X, x + Rational(s) * y) : f;
    const Polynomial gs = s ? g.substitute(X, x + Rational(s) * y) : g;
    const long df = fs.degree(Y), dg = gs.degree(Y);
    if (df <= 0 || dg <= 0) continue;
    if (!fs.coefficient(Y, df).is_constant() || !gs.coefficient(Y, dg).is_constant()) continue;
    const Polynomial r = resultant(fs, gs, Y);
    if (r.is_zero()) {
      non_finite = true;
      continue;
    }
    const UnivariatePolynomial u = to_univariate(r, X);
    if (gcd(u, u.derivative()).degree() > 0) continue;

    IntersectionCount out;
    out.shear = s;
    out.total = u.degree();
    out.roots = isolate_real_roots(u);
    out.count = out.roots.size();
    out.projection = u;
    if (with_points) {
      for (const auto& iv : out.roots) {
        const auto fine = refine(u, iv, Rational(1, 1L << 40));
        const Rational x0 = (fine.lo + fine.hi) / 2;
        const auto fiber = to_univariate(fs.specialize({{X, x0}}), Y);
        double best_y = 0, best = INFINITY;
        if (!fiber.is_zero())
          for (const auto& yv : isolate_real_roots(fiber)) {
            const auto yr = refine(fiber, yv, Rational(1, 1L << 40));
            const Rational y0 = (yr.lo + yr.hi) / 2;
            const double residual = std::abs(to_double(gs.evaluate({{X, x0}, {Y, y0}})));
            if (residual < best) {
              best = residual;
              best_y = to_double(y0);
            }
          }
        out.points.emplace_back(to_double(x0) + static_cast<double>(s) * best_y, best_y);
      }
    }
    return out;
  }
  throw DegenerateInstance(non_finite ? "non-finite intersection" : "degenerate instance");
}

EliminationResult eliminate_to_t(const polysys::MetaSystem& m, const EliminationOptions& options) {
  const auto h = prepared(m, options.strip_monomials);
  EliminationResult result;
  for (const auto& p : h)
    if (p.is_constant()) {
      // A nonzero constant (after removing t-powers): no solution with t != 0.
      result.E = UnivariatePolynomial({Rational(1)});
      result.f0_pivot = result.E;
      result.projections.push_back({"constant equation", 0, 0});
      return result;
    }

  const std::size_t ti = h[0].var_index("t"), xi = h[0].var_index("x"), yi = h[0].var_index("y");
  const std::uint32_t g = t_exponent_gcd(h, ti);
  result.compression = g;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int attempt = 0; attempt <= 8; ++attempt) {
    long a = 0, b = 0;
    if (attempt > 0)
      while (a == 0 && b == 0) {
        a = coord(rng);
        b = coord(rng);
      }
    std::array<P3, 3> d;
    for (int k = 0; k < 3; ++k)
      d[k] = to_dense<3>(change_coordinates(h[k], a, b), {xi, yi, ti}, {1, 1, g});

    const IPoly e0 = iterated_resultant(d[0], d[1], d[2]);
    if (e0.zero()) continue;

    result.shear_used = {a, b};
    long order0 = 0;
    const IPoly s0 = strip_order(e0, &order0);
    result.degree_raw = static_cast<long>(g) * e0.degree();
    result.t_power_removed = static_cast<unsigned>(g * order0);
    result.projections.push_back({"pivot f0", result.degree_raw, static_cast<long>(g) * order0});

    std::vector<IPoly> candidates{s0};
    if (options.prune) {
      for (int pivot = 1; pivot < 3; ++pivot) {
        const IPoly ep = iterated_resultant(d[pivot], d[(pivot + 1) % 3], d[(pivot + 2) % 3]);
        long order = 0;
        if (!ep.zero()) strip_order(ep, &order);
        result.projections.push_back({"pivot f" + std::to_string(pivot),
                                      ep.zero() ? -1 : static_cast<long>(g) * ep.degree(),
                                      static_cast<long>(g) * order});
        candidates.push_back(ep);
      }
    }
    const IPoly pruned = integer_squarefree(combine(candidates));
    result.E = UnivariatePolynomial::from_integers(pruned).inflate(g);
    result.f0_pivot = UnivariatePolynomial::from_integers(integer_squarefree(primitive(s0))).inflate(g);
    result.squarefree = true;
    return result;
  }
  throw EliminationFailure("extraneous component suspected");
}

UnivariatePolynomial project_to(const polysys::MetaSystem& m, const std::string& var, std::uint64_t seed) {
  if (var != "x" && var != "y") throw DomainError("projection target must be x or y");
  const std::string other = var == "x" ? "y" : "x";
  const auto h = prepared(m, true);
  for (const auto& p : h)
    if (p.is_constant()) return UnivariatePolynomial({Rational(1)});
  const std::size_t ti = h[0].var_index("t"), oi = h[0].var_index(other), vi = h[0].var_index(var);
  const std::uint32_t g = t_exponent_gcd(h, ti);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(1, 4);
  const auto& vars = h[0].variables();
  const auto pv = Polynomial::variable(vars, var);
  const auto po = Polynomial::variable(vars, other);
  for (int attempt = 0; attempt <= 8; ++attempt) {
    const long b = attempt == 0 ? 0 : coord(rng) * ((rng() & 1) ? 1 : -1);
    std::array<P3, 3> d;
    for (int k = 0; k < 3; ++k) {
      const Polynomial p = b ? h[k].substitute(other, po + Rational(b) * pv) : h[k];
      d[k] = to_dense<3>(p, {ti, oi, vi}, {g, 1, 1});
    }
    std::vector<IPoly> candidates;
    for (int pivot = 0; pivot < 3; ++pivot)
      candidates.push_back(iterated_resultant(d[pivot], d[(pivot + 1) % 3], d[(pivot + 2) % 3]));
    const IPoly c = combine(candidates);
    if (c.zero()) continue;
    return UnivariatePolynomial::from_integers(integer_squarefree(c));
  }
  throw EliminationFailure("extraneous component suspected");
}

std::vector<BoundaryReport> boundary_check(const polysys::MetaSystem& m) {
  std::vector<BoundaryReport> out;
  for (const auto& r : polysys::boundary_subsystems(m)) {
    BoundaryReport rep;
    rep.label = r.label;
    std::optional<std::string> free_var;
    for (const std::string v : {"x", "y"})
      if (std::find(r.zero.begin(), r.zero.end(), v) == r.zero.end()) free_var = v;

    std::vector<Polynomial> ps;
    bool monomial = false;
    for (std::size_t k = 0; k < r.polys.size(); ++k) {
      Polynomial p = strip_variable(r.polys[k], "t");
      if (free_var) p = strip_variable(p, *free_var);
      if (p.is_constant()) {
        monomial = true;
        rep.reason = "f" + std::to_string(r.colors[k]) + " restricts to a monomial";
        break;
      }
      ps.push_back(std::move(p));
    }
    if (r.polys.empty()) {
      rep.reason = "no equation survives on this face";
      out.push_back(std::move(rep));
      continue;
    }
    if (monomial) {
      rep.empty = true;
      out.push_back(std::move(rep));
      continue;
    }

    std::vector<UnivariatePolynomial> in_t;
    if (!free_var) {
      for (const auto& p : ps) in_t.push_back(to_univariate(p, "t"));
    } else {
      std::vector<Polynomial> curves;
      for (const auto& p : ps) {
        if (p.degree(*free_var) == 0)
          in_t.push_back(to_univariate(p, "t"));
        else
          curves.push_back(p);
      }
      if (curves.size() == 1 && in_t.empty()) {
        rep.reason = "a single equation cuts out a curve";
        out.push_back(std::move(rep));
        continue;
      }
      for (std::size_t a = 0; a < curves.size(); ++a)
        for (std::size_t b = a + 1; b < curves.size(); ++b)
          in_t.push_back(to_univariate(resultant(curves[a], curves[b], *free_var), "t"));
    }
    UnivariatePolynomial e;
    for (const auto& p : in_t) e = gcd(e, p);
    if (e.is_zero()) {
      rep.reason = "restricted equations share a common component";
      out.push_back(std::move(rep));
      continue;
    }
    // Remove t = 0.
    const unsigned z = e.order_at_zero();
    if (z > 0) e = UnivariatePolynomial(std::vector<Rational>(e.coefficients().begin() + z, e.coefficients().end()));
    rep.eliminant = e;
    rep.real_roots = isolate_real_roots(e);
    rep.empty = rep.real_roots.empty();
    rep.reason = rep.empty ? "eliminant has no nonzero real root" : "eliminant has nonzero real roots";
    out.push_back(std::move(rep));
  }
  return out;
}

EmptinessCertificate certify_no_real_solutions(const polysys::MetaSystem& m, const std::optional<Rational>& lo,
                                               const std::optional<Rational>& hi, std::uint64_t seed) {
  EmptinessCertificate cert;
  auto in_range = [&](const IsolatingInterval& iv) {
    // Conservative: any overlap with (lo, hi] counts.
    if (lo && iv.hi <= *lo) return false;
    if (hi && iv.lo > *hi) return false;
    return true;
  };

  cert.boundary = boundary_check(m);
  bool boundary_ok = true;
  for (const auto& b : cert.boundary) {
    if (b.empty) continue;
    if (!b.eliminant) {
      boundary_ok = false;
      continue;
    }
    for (const auto& iv : b.real_roots)
      if (in_range(iv)) boundary_ok = false;
  }

  EliminationOptions opt;
  opt.seed = seed;
  opt.strip_monomials = true;
  cert.elimination = eliminate_to_t(m, opt);
  cert.t_roots = isolate_real_roots(cert.elimination.E, lo, hi);
  bool torus_ok = cert.t_roots.empty();
  cert.method = "t-eliminant";
  if (!torus_ok) {
    for (const std::string var : {"x", "y"}) {
      auto p = project_to(m, var, seed);
      if (isolate_real_roots(p).empty()) {
        torus_ok = true;
        cert.method = var + "-projection";
        cert.projection = std::move(p);
        break;
      }
    }
  }
  cert.certified = torus_ok && boundary_ok;
  if (!boundary_ok) cert.method += ", boundary not certified";
  return cert;
}

nlohmann::json to_json(const EliminationResult& r) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& iv : isolate_real_roots(r.E)) roots.push_back(to_json(refine(r.E, iv, Rational(1, 1 << 20))));
  nlohmann::json proj = nlohmann::json::array();
  for (const auto& p : r.projections)
    proj.push_back({{"label", p.label}, {"degree_raw", p.degree_raw}, {"t_power", p.t_power}});
  nlohmann::json j{{"E", r.E.to_string("t")},
                   {"degree_raw", r.degree_raw},
                   {"degree_squarefree", r.E.degree()},
                   {"degree_f0_pivot_squarefree", r.f0_pivot.degree()},
                   {"t_power_removed", r.t_power_removed},
                   {"compression", r.compression},
                   {"shear_used", {r.shear_used.first, r.shear_used.second}},
                   {"squarefree", r.squarefree},
                   {"projections", proj},
                   {"real_roots", roots}};
  const auto mp = min_positive_real_root(r.E);
  j["min_positive_root"] = mp ? to_json(*mp) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const BoundaryReport& r) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& iv : r.real_roots) roots.push_back(to_json(iv));
  return {{"face", r.label},
          {"empty", r.empty},
          {"reason", r.reason},
          {"eliminant", r.eliminant ? nlohmann::json(r.eliminant->to_string("t")) : nlohmann::json(nullptr)},
          {"real_roots", roots}};
}

}  // namespace wronski::realroots
