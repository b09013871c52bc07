#include "wronski/heights.hpp"

#include <algorithm>
#include <fstream>

#include "wronski/errors.hpp"

namespace wronski::heights {

HeightFunction HeightFunction::make(std::int64_t delta, std::map<LatticePoint, Rational> values) {
  const auto pts = lattice::lattice_points(delta);
  if (values.size() != pts.size())
    throw DomainError("height function must assign a value to each of the " +
                      std::to_string(pts.size()) + " lattice points");
  for (const auto& p : pts) {
    auto it = values.find(p);
    if (it == values.end())
      throw DomainError("height function has no value at (" + std::to_string(p.i) + "," +
                        std::to_string(p.j) + ")");
    if (it->second < 0) throw DomainError("height values must be nonnegative");
  }
  HeightFunction w;
  w.delta_ = delta;
  w.values_ = std::move(values);
  return w;
}

const Rational& HeightFunction::at(LatticePoint p) const {
  auto it = values_.find(p);
  if (it == values_.end())
    throw DomainError("no height at (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  return it->second;
}

bool HeightFunction::is_integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& kv) { return kv.second.get_den() == 1; });
}

Rational ConeInequality::evaluate(const HeightFunction& w) const {
  Rational sum = 0;
  for (const auto& [p, c] : coefficients) sum += c * w.at(p);
  return sum;
}

std::int64_t rho(LatticePoint p) { return p.i * p.i + p.j * p.j + p.i * p.j; }

std::int64_t alcoved_lift(std::int64_t z1, std::int64_t z2) {
  return z1 * z1 + z2 * z2 + (z1 - z2) * (z1 - z2);
}

LatticePoint tau(LatticePoint p) { return {p.i - p.j, p.j}; }
LatticePoint tau_inverse(LatticePoint p) { return {p.i + p.j, p.j}; }

HeightFunction rho_heights(std::int64_t delta) {
  std::map<LatticePoint, Rational> v;
  for (const auto& p : lattice::lattice_points(delta)) v.emplace(p, Rational(rho(p)));
  return HeightFunction::make(delta, std::move(v));
}

std::vector<ConeInequality> secondary_cone_facets(std::int64_t delta) {
  if (delta < 1) throw DomainError("delta must be a positive integer");
  std::vector<ConeInequality> out;
  for (std::int64_t j = 1; j <= delta; ++j)
    for (std::int64_t i = 1; i + j <= delta; ++i) {
      out.push_back({1, {i, j}, {{{{i - 1, j - 1}, 1}, {{i, j}, 1}, {{i - 1, j}, -1}, {{i, j - 1}, -1}}}});
      out.push_back({2, {i, j}, {{{{i - 1, j}, 1}, {{i + 1, j - 1}, 1}, {{i, j - 1}, -1}, {{i, j}, -1}}}});
      out.push_back({3, {i, j}, {{{{i, j - 1}, 1}, {{i - 1, j + 1}, 1}, {{i - 1, j}, -1}, {{i, j}, -1}}}});
    }
  return out;
}

ConeCheck in_secondary_cone(const HeightFunction& w) {
  ConeCheck check;
  for (const auto& ineq : secondary_cone_facets(w.delta()))
    if (ineq.evaluate(w) <= 0) check.violated.push_back(ineq);
  check.inside = check.violated.empty();
  return check;
}

namespace {

using Values = std::map<LatticePoint, Rational>;

// Lower bound on w(p) from every facet inequality in which p is an apex and
// the other three points already carry values.
std::optional<Rational> apex_bound(const std::vector<ConeInequality>& facets, const Values& w,
                                   LatticePoint p) {
  std::optional<Rational> best;
  for (const auto& ineq : facets) {
    const auto& c = ineq.coefficients;
    int apex = -1;
    if (c[0].first == p) apex = 0;
    if (c[1].first == p) apex = 1;
    if (apex < 0) continue;
    const auto& other = c[1 - apex].first;
    auto wo = w.find(other), wq = w.find(c[2].first), wr = w.find(c[3].first);
    if (wo == w.end() || wq == w.end() || wr == w.end()) continue;
    Rational v = wq->second + wr->second - wo->second + 1;
    if (!best || v > *best) best = v;
  }
  return best;
}

void assign(const std::vector<ConeInequality>& facets, Values& w, const std::vector<LatticePoint>& order,
            std::vector<LatticePoint>* trace) {
  for (const auto& p : order) {
    auto v = apex_bound(facets, w, p);
    if (!v) throw std::logic_error("minimal height propagation stalled");
    w[p] = *v;
    if (trace) trace->push_back(p);
  }
}

Values minimal_values(std::int64_t delta, std::vector<LatticePoint>* trace) {
  const auto facets = secondary_cone_facets(delta);
  Values w;
  if (delta == 1) {
    for (const auto& p : lattice::lattice_points(1)) {
      w[p] = 0;
      if (trace) trace->push_back(p);
    }
    return w;
  }
  if (delta == 2) {
    for (LatticePoint p : {LatticePoint{1, 0}, LatticePoint{0, 1}, LatticePoint{1, 1}}) {
      w[p] = 0;
      if (trace) trace->push_back(p);
    }
    assign(facets, w, {{0, 0}, {2, 0}, {0, 2}}, trace);
    return w;
  }
  if (delta == 3) {
    std::vector<LatticePoint> rest;
    for (LatticePoint p : {LatticePoint{1, 1}, LatticePoint{2, 1}, LatticePoint{1, 2}}) {
      w[p] = 0;
      if (trace) trace->push_back(p);
    }
    for (const auto& p : lattice::lattice_points(3))
      if (!w.count(p)) rest.push_back(p);
    // Greedy: repeatedly take the first point (ordered by i, then j) that
    // already has a fully determined apex bound.
    std::sort(rest.begin(), rest.end(), [](const LatticePoint& a, const LatticePoint& b) {
      return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    while (!rest.empty()) {
      bool progressed = false;
      for (auto it = rest.begin(); it != rest.end(); ++it) {
        if (auto v = apex_bound(facets, w, *it)) {
          w[*it] = *v;
          if (trace) trace->push_back(*it);
          rest.erase(it);
          progressed = true;
          break;
        }
      }
      if (!progressed) throw std::logic_error("minimal height seed propagation stalled");
    }
    return w;
  }

  for (const auto& [p, v] : minimal_values(delta - 3, trace)) w[p + LatticePoint{1, 1}] = v;
  if (trace)
    for (auto& p : *trace) p = p + LatticePoint{1, 1};

  const auto d = delta;
  std::vector<LatticePoint> order;
  // Ring points across an edge of the inner triangle.
  for (std::int64_t k = 2; k <= d - 2; ++k) order.push_back({k, 0});
  for (std::int64_t k = 2; k <= d - 2; ++k) order.push_back({0, k});
  for (std::int64_t k = 2; k <= d - 2; ++k) order.push_back({k, d - k});
  // Remaining boundary points next to the corners.
  for (LatticePoint p : {LatticePoint{1, 0}, LatticePoint{d - 1, 0}, LatticePoint{0, 1},
                         LatticePoint{0, d - 1}, LatticePoint{1, d - 1}, LatticePoint{d - 1, 1}})
    order.push_back(p);
  // Corners.
  for (LatticePoint p : {LatticePoint{0, 0}, LatticePoint{d, 0}, LatticePoint{0, d}}) order.push_back(p);
  assign(facets, w, order, trace);
  return w;
}

}  // namespace

HeightFunction minimal_height(std::int64_t delta) {
  if (delta < 1) throw DomainError("delta must be a positive integer");
  return HeightFunction::make(delta, minimal_values(delta, nullptr));
}

std::vector<LatticePoint> minimal_height_order(std::int64_t delta) {
  if (delta < 1) throw DomainError("delta must be a positive integer");
  std::vector<LatticePoint> trace;
  minimal_values(delta, &trace);
  return trace;
}

std::vector<FoldingInequality> folding_inequalities(const lattice::Triangulation2D& t) {
  std::vector<FoldingInequality> out;
  const auto& pts = t.points();
  for (const auto& [edge, apexes] : t.edge_apexes()) {
    const auto q = pts[edge.a], r = pts[edge.b];
    const auto p = pts[apexes[0]], s = pts[apexes[1]];
    // s = a p + b q + c r with barycentric weights (A, B, C) / D; convexity
    // across qr reads D w(s) - A w(p) - B w(q) - C w(r) > 0 for D > 0.
    std::int64_t D = lattice::orient2d(p, q, r);
    std::int64_t A = lattice::orient2d(s, q, r);
    std::int64_t B = lattice::orient2d(p, s, r);
    std::int64_t C = lattice::orient2d(p, q, s);
    if (D < 0) {
      D = -D;
      A = -A;
      B = -B;
      C = -C;
    }
    FoldingInequality f;
    f.edge = edge;
    f.coefficients = {{apexes[1], Integer(D)}, {apexes[0], Integer(-A)},
                      {edge.a, Integer(-B)}, {edge.b, Integer(-C)}};
    out.push_back(std::move(f));
  }
  return out;
}

bool induces(const lattice::Triangulation2D& t, const std::vector<Rational>& w) {
  if (w.size() != t.points().size()) throw DomainError("height vector length does not match point count");
  for (const auto& f : folding_inequalities(t)) {
    Rational sum = 0;
    for (const auto& [k, c] : f.coefficients) sum += Rational(c) * w[k];
    if (sum <= 0) return false;
  }
  return true;
}

std::map<LatticePoint, Rational> point_map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("expected a JSON object {\"i,j\": value}");
  std::map<LatticePoint, Rational> out;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw DomainError("bad point key '" + key + "', expected \"i,j\"");
    LatticePoint p;
    try {
      p = {std::stoll(key.substr(0, comma)), std::stoll(key.substr(comma + 1))};
    } catch (const std::exception&) {
      throw DomainError("bad point key '" + key + "'");
    }
    Rational v = value.is_string() ? parse_rational(value.get<std::string>()) : parse_rational(value.dump());
    if (!out.emplace(p, v).second) throw DomainError("duplicate point key '" + key + "'");
  }
  return out;
}

nlohmann::json to_json(const std::map<LatticePoint, Rational>& values) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [p, v] : values) {
    const auto key = std::to_string(p.i) + "," + std::to_string(p.j);
    if (v.get_den() == 1 && v.get_num().fits_slong_p())
      j[key] = v.get_num().get_si();
    else
      j[key] = to_string(v);
  }
  return j;
}

HeightFunction load_heights(std::int64_t delta, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open height file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("cannot parse " + path + ": " + e.what());
  }
  return HeightFunction::make(delta, point_map_from_json(j));
}

HeightFunction resolve_height(std::int64_t delta, const std::string& spec) {
  if (spec == "rho") return rho_heights(delta);
  if (spec == "min") return minimal_height(delta);
  return load_heights(delta, spec);
}

}  // namespace wronski::heights
