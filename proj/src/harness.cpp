#include "wronski/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "wronski/errors.hpp"
#include "wronski/heights.hpp"
#include "wronski/lattice.hpp"
#include "wronski/orient.hpp"
#include "wronski/realroots.hpp"

#ifndef WRONSKI_VERSION
#define WRONSKI_VERSION "0.0.0"
#endif

namespace wronski::harness {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr int kRedraws = 16;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json rational_json(const Rational& q) { return wronski::to_string(q); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw DomainError("expected a rational, got " + j.dump());
}

nlohmann::json colors_json(const Colors& c) {
  return nlohmann::json::array({rational_json(c[0]), rational_json(c[1]), rational_json(c[2])});
}

Colors colors_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("colour parameters need three entries");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

nlohmann::json interval_json(const Interval& i) {
  return nlohmann::json::array({rational_json(i.lo), rational_json(i.hi)});
}

Interval interval_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("an interval needs two endpoints");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

heights::HeightFunction height_of(const ExperimentConfig& cfg) {
  return heights::resolve_height(cfg.delta, cfg.height);
}

RunRecord start_record(const ExperimentConfig& cfg) {
  RunRecord r;
  r.config = to_json(cfg);
  return r;
}

void require_pair(const ExperimentConfig& cfg) {
  if (!cfg.t || !cfg.c || !cfg.c_prime) throw DomainError("a pair needs t, c and c'");
}

nlohmann::json points_json(const std::vector<std::pair<double, double>>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [x, y] : pts) out.push_back({x, y});
  return out;
}

// ---- Monte Carlo -----------------------------------------------------------

nlohmann::json hexagon_instance(const ExperimentConfig& cfg, const polysys::Configuration& hex, std::size_t index) {
  const std::uint64_t seed = instance_seed(*cfg.seed, index);
  std::uint64_t state = seed;
  const Rational tiny(1, Integer(1) << 30);
  int redraws = 0;
  for (int attempt = 0; attempt <= kRedraws; ++attempt) {
    const Rational t = dyadic(splitmix64(state), cfg.t_range);
    Colors c, cp;
    for (auto& v : c) v = dyadic(splitmix64(state), cfg.c_range);
    for (auto& v : cp) v = dyadic(splitmix64(state), cfg.c_range);
    const std::uint64_t shear_seed = splitmix64(state);
    const auto zero = [](const Rational& v) { return v == 0; };
    if (abs(t) < tiny || std::any_of(c.begin(), c.end(), zero) || std::any_of(cp.begin(), cp.end(), zero)) {
      ++redraws;
      continue;
    }
    const auto pair = polysys::wronski_pair(hex, c, cp, t);
    try {
      const auto r = realroots::count_real_intersections(pair.polys[0], pair.polys[1], shear_seed);
      return {{"index", index}, {"seed", seed},       {"t", rational_json(t)}, {"c", colors_json(c)},
              {"c_prime", colors_json(cp)}, {"count", r.count}, {"total", r.total}, {"shear", r.shear},
              {"redraws", redraws}};
    } catch (const DegenerateInstance&) {
      ++redraws;
    }
  }
  throw DegenerateInstance("instance " + std::to_string(index) + " stayed degenerate after " +
                           std::to_string(kRedraws) + " redraws");
}

// ---- marching squares ------------------------------------------------------

struct Term {
  double c;
  int i;
  int j;
};

std::vector<Term> float_terms(const Polynomial& p) {
  if (p.variables().size() != 2) throw DomainError("plotting needs polynomials in two variables");
  std::vector<Term> out;
  for (const auto& [e, c] : p.terms())
    out.push_back({to_double(c), static_cast<int>(e[0]), static_cast<int>(e[1])});
  return out;
}

double eval(const std::vector<Term>& terms, double x, double y) {
  double s = 0;
  for (const auto& t : terms) s += t.c * std::pow(x, t.i) * std::pow(y, t.j);
  return s;
}

struct Canvas {
  std::array<double, 4> w;
  double size = 640;
  double margin = 20;
  double px(double x) const { return margin + (x - w[0]) / (w[1] - w[0]) * size; }
  double py(double y) const { return margin + (w[3] - y) / (w[3] - w[2]) * size; }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << v;
  return s.str();
}

// Path data of the zero set of `terms` over the window; empty when none.
std::string contour(const std::vector<Term>& terms, const Canvas& cv, int n) {
  const double dx = (cv.w[1] - cv.w[0]) / n, dy = (cv.w[3] - cv.w[2]) / n;
  std::vector<double> v((n + 1) * (n + 1));
  for (int b = 0; b <= n; ++b)
    for (int a = 0; a <= n; ++a) v[b * (n + 1) + a] = eval(terms, cv.w[0] + a * dx, cv.w[2] + b * dy);

  std::ostringstream d;
  const auto seg = [&](std::pair<double, double> p, std::pair<double, double> q) {
    d << 'M' << fmt(cv.px(p.first)) << ' ' << fmt(cv.py(p.second)) << 'L' << fmt(cv.px(q.first)) << ' '
      << fmt(cv.py(q.second));
  };
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      const double x0 = cv.w[0] + a * dx, y0 = cv.w[2] + b * dy;
      // corners counterclockwise from bottom left
      const std::array<double, 4> f{v[b * (n + 1) + a], v[b * (n + 1) + a + 1], v[(b + 1) * (n + 1) + a + 1],
                                    v[(b + 1) * (n + 1) + a]};
      const std::array<std::pair<double, double>, 4> c{
          {{x0, y0}, {x0 + dx, y0}, {x0 + dx, y0 + dy}, {x0, y0 + dy}}};
      int index = 0;
      for (int k = 0; k < 4; ++k)
        if (f[k] > 0) index |= 1 << k;
      if (index == 0 || index == 15) continue;
      const auto cross = [&](int k) {
        const int l = (k + 1) % 4;
        const double s = f[k] / (f[k] - f[l]);
        return std::make_pair(c[k].first + s * (c[l].first - c[k].first),
                              c[k].second + s * (c[l].second - c[k].second));
      };
      std::vector<int> edges;
      for (int k = 0; k < 4; ++k)
        if ((f[k] > 0) != (f[(k + 1) % 4] > 0)) edges.push_back(k);
      if (edges.size() == 2) {
        seg(cross(edges[0]), cross(edges[1]));
      } else {
        // saddle: pair the crossings according to the sign at the centre
        const bool centre = (f[0] + f[1] + f[2] + f[3]) / 4 > 0;
        if (centre == (f[0] > 0)) {
          seg(cross(0), cross(1));
          seg(cross(2), cross(3));
        } else {
          seg(cross(3), cross(0));
          seg(cross(1), cross(2));
        }
      }
    }
  return d.str();
}

std::array<double, 4> fitted_window(const std::vector<std::pair<double, double>>& pts) {
  if (pts.empty()) return {-2, 2, -2, 2};
  double x0 = pts[0].first, x1 = x0, y0 = pts[0].second, y1 = y0;
  for (const auto& [x, y] : pts) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  const double half = std::max({x1 - x0, y1 - y0, 1.0}) * 0.75;
  const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  return {cx - half, cx + half, cy - half, cy + half};
}

}  // namespace

std::string version() { return WRONSKI_VERSION; }

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGamma);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master + index * kGamma;
  return splitmix64(state);
}

Rational dyadic(std::uint64_t u, const Interval& range) {
  Integer num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  Rational frac(num, Integer(1) << 64);
  frac.canonicalize();
  return range.lo + (range.hi - range.lo) * frac;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::montecarlo: return "montecarlo";
    case Kind::pair: return "pair";
    case Kind::meta: return "meta";
    case Kind::triangulate: return "triangulate";
    case Kind::orient: return "orient";
    case Kind::heights: return "heights";
    case Kind::plot: return "plot";
  }
  return "?";
}

Kind kind_from_string(const std::string& s) {
  for (Kind k : {Kind::montecarlo, Kind::pair, Kind::meta, Kind::triangulate, Kind::orient, Kind::heights,
                 Kind::plot})
    if (to_string(k) == s) return k;
  throw DomainError("unknown experiment kind: " + s);
}

void ExperimentConfig::validate() const {
  if (delta < 1) throw DomainError("delta must be at least 1");
  if (n < 1) throw DomainError("n must be at least 1");
  if (t_range.lo >= t_range.hi) throw DomainError("empty t range");
  if (c_range.lo >= c_range.hi) throw DomainError("empty c range");
  if (t0_scan && t0_scan->lo >= t0_scan->hi) throw DomainError("empty t0 scan range");
  if (kind == Kind::montecarlo && !seed) throw DomainError("the Monte Carlo experiment needs a seed");
  if (resolution < 32) throw DomainError("plot resolution must be at least 32");
  if (window && ((*window)[0] >= (*window)[1] || (*window)[2] >= (*window)[3]))
    throw DomainError("empty plot window");
  if (format != "json" && format != "csv" && format != "svg") throw DomainError("unknown format: " + format);
  if (threads < 1) throw DomainError("threads must be at least 1");
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j{{"kind", to_string(c.kind)},
                   {"delta", c.delta},
                   {"height", c.height},
                   {"n", c.n},
                   {"t_range", interval_json(c.t_range)},
                   {"c_range", interval_json(c.c_range)},
                   {"eliminate", c.eliminate},
                   {"resolution", c.resolution},
                   {"format", c.format}};
  if (!c.polygon.empty()) j["polygon"] = c.polygon;
  if (c.seed) j["seed"] = *c.seed;
  if (c.t) j["t"] = rational_json(*c.t);
  if (c.c) j["c"] = colors_json(*c.c);
  if (c.c_prime) j["c_prime"] = colors_json(*c.c_prime);
  if (!c.kappa.empty()) j["kappa"] = heights::to_json(c.kappa);
  if (c.t0_scan) j["t0_scan"] = interval_json(*c.t0_scan);
  if (c.window) j["window"] = *c.window;
  if (!c.out.empty()) j["out"] = c.out;
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("configuration must be a JSON object");
  static const std::set<std::string> known{"kind",  "delta",   "height",    "polygon", "seed",       "n",
                                           "t_range", "c_range", "t",       "c",       "c_prime",    "kappa",
                                           "eliminate", "t0_scan", "window", "resolution", "threads", "out",
                                           "format"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw DomainError("unknown configuration key: " + key);
  ExperimentConfig c;
  try {
    if (j.contains("kind")) c.kind = kind_from_string(j["kind"].get<std::string>());
    if (j.contains("delta")) c.delta = j["delta"].get<std::int64_t>();
    if (j.contains("height")) c.height = j["height"].get<std::string>();
    if (j.contains("polygon")) c.polygon = j["polygon"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("n")) c.n = j["n"].get<std::size_t>();
    if (j.contains("t_range")) c.t_range = interval_from_json(j["t_range"]);
    if (j.contains("c_range")) c.c_range = interval_from_json(j["c_range"]);
    if (j.contains("t")) c.t = rational_from_json(j["t"]);
    if (j.contains("c")) c.c = colors_from_json(j["c"]);
    if (j.contains("c_prime")) c.c_prime = colors_from_json(j["c_prime"]);
    if (j.contains("kappa")) c.kappa = heights::point_map_from_json(j["kappa"]);
    if (j.contains("eliminate")) c.eliminate = j["eliminate"].get<bool>();
    if (j.contains("t0_scan")) c.t0_scan = interval_from_json(j["t0_scan"]);
    if (j.contains("window")) c.window = j["window"].get<std::array<double, 4>>();
    if (j.contains("resolution")) c.resolution = j["resolution"].get<int>();
    if (j.contains("threads")) c.threads = j["threads"].get<unsigned>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed configuration: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json to_json(const RunRecord& r, bool with_timing) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
  nlohmann::json j{{"version", r.version}, {"config", r.config},     {"summary", r.summary},
                   {"histogram", hist},    {"warnings", r.warnings}, {"instances", r.instances}};
  if (with_timing) {
    j["wall_seconds"] = r.wall_seconds;
    j["timings"] = r.timings;
  }
  return j;
}

std::string to_csv(const RunRecord& r) {
  std::vector<std::string> columns;
  for (const auto& inst : r.instances)
    for (const auto& [key, _] : inst.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  const auto cell = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : ";") + (e.is_string() ? e.get<std::string>() : e.dump());
      return s;
    }
    return v.dump();
  };
  std::ostringstream out;
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  for (const auto& inst : r.instances) {
    for (std::size_t k = 0; k < columns.size(); ++k)
      out << (k ? "," : "") << (inst.contains(columns[k]) ? cell(inst[columns[k]]) : "");
    out << '\n';
  }
  return out.str();
}

RunRecord monte_carlo_hexagon(const ExperimentConfig& cfg) {
  cfg.validate();
  if (!cfg.seed) throw DomainError("the Monte Carlo experiment needs a seed");
  const auto start = Clock::now();
  RunRecord rec = start_record(cfg);
  const auto hex = polysys::hexagon_configuration(cfg.kappa);

  std::vector<nlohmann::json> results(cfg.n);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.n)));
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < cfg.n; i += workers) results[i] = hexagon_instance(cfg, hex, i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::map<std::string, std::map<long, std::size_t>> by_sign;
  std::size_t redraws = 0;
  bool parity = true;
  for (auto& inst : results) {
    const long count = inst["count"].get<long>();
    ++rec.histogram[count];
    ++by_sign[parse_rational(inst["t"].get<std::string>()) > 0 ? "t>0" : "t<0"][count];
    redraws += inst["redraws"].get<std::size_t>();
    parity = parity && (count % 2 == 0);
    rec.instances.push_back(std::move(inst));
  }
  const auto share = [&](long k) {
    const auto it = rec.histogram.find(k);
    return it == rec.histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(cfg.n);
  };
  nlohmann::json signs = nlohmann::json::object();
  for (const auto& [label, h] : by_sign) {
    nlohmann::json hj = nlohmann::json::object();
    for (const auto& [k, v] : h) hj[std::to_string(k)] = v;
    signs[label] = hj;
  }
  const bool only_two_six = std::all_of(rec.histogram.begin(), rec.histogram.end(),
                                        [](const auto& kv) { return kv.first == 2 || kv.first == 6; });
  rec.summary = {{"n", cfg.n},
                 {"share_2", share(2)},
                 {"share_6", share(6)},
                 {"counts_in_2_6", only_two_six},
                 {"parity_even", parity},
                 {"redraws", redraws},
                 {"by_sign_of_t", signs}};
  rec.wall_seconds = seconds_since(start);
  return rec;
}

RunRecord pair_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  require_pair(cfg);
  const auto start = Clock::now();
  RunRecord rec = start_record(cfg);
  const auto omega = height_of(cfg);
  const auto cone = heights::in_secondary_cone(omega);
  if (!cone.inside)
    rec.warnings.push_back("height is not in the secondary cone of the honeycomb triangulation (" +
                           std::to_string(cone.violated.size()) + " violated inequalities)");
  const auto config = polysys::honeycomb_configuration(omega, cfg.kappa);
  const auto pair = polysys::wronski_pair(config, *cfg.c, *cfg.c_prime, *cfg.t);
  const auto r = realroots::count_real_intersections(pair.polys[0], pair.polys[1], cfg.seed.value_or(0), true);
  const long sigma = lattice::signature(lattice::honeycomb_triangulation(cfg.delta));
  const bool orientable = orient::orientable(orient::facet_system(orient::dilated_triangle(cfg.delta)));
  rec.instances.push_back({{"f", pair.polys[0].to_string()},
                           {"g", pair.polys[1].to_string()},
                           {"count", r.count},
                           {"total", r.total},
                           {"shear", r.shear},
                           {"points", points_json(r.points)}});
  ++rec.histogram[static_cast<long>(r.count)];
  rec.summary = {{"count", r.count},
                 {"total", r.total},
                 {"signature", sigma},
                 {"orientable", orientable},
                 {"in_cone", cone.inside},
                 {"meets_signature_bound", static_cast<long>(r.count) >= sigma}};
  rec.wall_seconds = seconds_since(start);
  return rec;
}

RunRecord meta_report(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  RunRecord rec = start_record(cfg);
  if (cfg.delta % 2 == 0)
    rec.warnings.push_back("delta is even: the toric variety is not orientable and no lower bound applies");
  const auto omega = height_of(cfg);
  if (!heights::in_secondary_cone(omega).inside)
    rec.warnings.push_back("height is not in the secondary cone of the honeycomb triangulation");
  const auto m = polysys::meta_system(polysys::honeycomb_configuration(omega, cfg.kappa));

  nlohmann::json system = nlohmann::json::array();
  for (const auto& f : m.f) system.push_back(f.to_string());
  rec.summary["system"] = system;

  auto t0 = Clock::now();
  nlohmann::json faces = nlohmann::json::array();
  bool faces_empty = true;
  for (const auto& b : realroots::boundary_check(m)) {
    faces.push_back(realroots::to_json(b));
    faces_empty = faces_empty && b.empty;
  }
  rec.summary["boundary"] = faces;
  rec.summary["boundary_empty"] = faces_empty;
  rec.timings["boundary"] = seconds_since(t0);

  if (cfg.eliminate) {
    t0 = Clock::now();
    const auto e = realroots::eliminate_to_t(m, {cfg.seed.value_or(0)});
    rec.timings["elimination"] = seconds_since(t0);
    rec.summary["elimination"] = realroots::to_json(e);
    rec.summary["real_roots"] = realroots::isolate_real_roots(e.E).size();

    const Interval scan = cfg.t0_scan.value_or(Interval{0, 1});
    nlohmann::json in_scan = nlohmann::json::array();
    const auto roots = realroots::isolate_real_roots(e.E, scan.lo, scan.hi);
    for (const auto& iv : roots) in_scan.push_back(realroots::to_json(realroots::refine(e.E, iv, Rational(1, 1 << 20))));
    rec.summary["scan"] = {{"range", interval_json(scan)}, {"roots_of_E", in_scan}};

    t0 = Clock::now();
    const auto cert = realroots::certify_no_real_solutions(m, scan.lo, scan.hi, cfg.seed.value_or(0));
    rec.timings["certificate"] = seconds_since(t0);
    rec.summary["scan"]["certified_empty"] = cert.certified;
    rec.summary["scan"]["method"] = cert.method;
  }
  rec.wall_seconds = seconds_since(start);
  return rec;
}

RunRecord triangulation_report(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  RunRecord rec = start_record(cfg);
  const auto tri = lattice::honeycomb_triangulation(cfg.delta);
  const auto fv = lattice::f_vector(tri);
  const auto omega = height_of(cfg);
  const auto cone = heights::in_secondary_cone(omega);
  rec.summary = {{"f_vector",
                  {{"vertices", fv.vertices},
                   {"edges", fv.edges},
                   {"triangles", fv.triangles},
                   {"interior_vertices", fv.interior_vertices},
                   {"interior_edges", fv.interior_edges}}},
                 {"signature", lattice::signature(tri)},
                 {"orientable", orient::orientable(orient::facet_system(orient::dilated_triangle(cfg.delta)))},
                 {"cone_facets", heights::secondary_cone_facets(cfg.delta).size()},
                 {"in_cone", cone.inside},
                 {"violated", cone.violated.size()}};
  rec.wall_seconds = seconds_since(start);
  return rec;
}

RunRecord orientability_report(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  RunRecord rec = start_record(cfg);
  std::vector<lattice::LatticePoint> pts;
  if (cfg.polygon.empty())
    pts = orient::dilated_triangle(cfg.delta);
  else if (cfg.polygon == "hexagon")
    pts = lattice::hexagon_points();
  else
    pts = lattice::load_triangulation(cfg.polygon).triangulation.points();
  const auto facets = orient::facet_system(pts);
  const auto result = orient::orientability(facets);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : facets.rows) rows.push_back({{"u", r.u}, {"b", r.b}});
  rec.summary = {{"orientable", result.orientable}, {"facets", rows}};
  if (result.witness) rec.summary["witness"] = *result.witness;
  rec.wall_seconds = seconds_since(start);
  return rec;
}

RunRecord heights_report(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  RunRecord rec = start_record(cfg);
  const auto omega = height_of(cfg);
  const auto cone = heights::in_secondary_cone(omega);
  nlohmann::json violated = nlohmann::json::array();
  for (const auto& v : cone.violated)
    violated.push_back({{"kind", v.kind}, {"anchor", {v.anchor.i, v.anchor.j}}, {"value", rational_json(v.evaluate(omega))}});
  rec.summary = {{"heights", heights::to_json(omega.values())},
                 {"integral", omega.is_integral()},
                 {"in_cone", cone.inside},
                 {"violated", violated}};
  rec.wall_seconds = seconds_since(start);
  return rec;
}

Plot plot_curves(const PlotSpec& spec) {
  if (spec.resolution < 32) throw DomainError("plot resolution must be at least 32");
  const auto& w = spec.window;
  if (w[0] >= w[1] || w[2] >= w[3]) throw DomainError("empty plot window");
  const Canvas cv{w};
  Plot plot;
  const std::array<std::string, 2> paths{contour(float_terms(spec.f), cv, spec.resolution),
                                         contour(float_terms(spec.g), cv, spec.resolution)};
  const auto r = realroots::count_real_intersections(spec.f, spec.g, 0, true);

  std::ostringstream svg;
  const double side = cv.size + 2 * cv.margin;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
  if (!spec.title.empty()) svg << "<title>" << spec.title << "</title>\n";
  if (w[0] < 0 && w[1] > 0)
    svg << "<line x1=\"" << fmt(cv.px(0)) << "\" y1=\"" << fmt(cv.py(w[3])) << "\" x2=\"" << fmt(cv.px(0))
        << "\" y2=\"" << fmt(cv.py(w[2])) << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
  if (w[2] < 0 && w[3] > 0)
    svg << "<line x1=\"" << fmt(cv.px(w[0])) << "\" y1=\"" << fmt(cv.py(0)) << "\" x2=\"" << fmt(cv.px(w[1]))
        << "\" y2=\"" << fmt(cv.py(0)) << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
  const std::array<const char*, 2> colours{"#1f5fbf", "#c0392b"};
  for (int k = 0; k < 2; ++k) {
    if (paths[k].empty()) {
      plot.warnings.push_back(std::string(k == 0 ? "f" : "g") + " has no zero contour in the window");
      continue;
    }
    svg << "<path class=\"curve\" d=\"" << paths[k] << "\" fill=\"none\" stroke=\"" << colours[k]
        << "\" stroke-width=\"1.2\"/>\n";
  }
  for (const auto& [x, y] : r.points) {
    if (x < w[0] || x > w[1] || y < w[2] || y > w[3]) continue;
    svg << "<circle class=\"marker\" cx=\"" << fmt(cv.px(x)) << "\" cy=\"" << fmt(cv.py(y))
        << "\" r=\"4\" fill=\"black\"/>\n";
    ++plot.markers;
  }
  if (plot.markers < r.count)
    plot.warnings.push_back(std::to_string(r.count - plot.markers) + " intersection points lie outside the window");
  double line = cv.margin + 14;
  for (const auto& msg : plot.warnings) {
    svg << "<text x=\"" << cv.margin + 4 << "\" y=\"" << line << "\" font-size=\"12\" fill=\"#555\">" << msg
        << "</text>\n";
    line += 14;
  }
  svg << "</svg>\n";
  plot.svg = svg.str();
  return plot;
}

Plot plot_curves(const ExperimentConfig& cfg) {
  cfg.validate();
  require_pair(cfg);
  const auto config = polysys::honeycomb_configuration(height_of(cfg), cfg.kappa);
  const auto pair = polysys::wronski_pair(config, *cfg.c, *cfg.c_prime, *cfg.t);
  PlotSpec spec{pair.polys[0], pair.polys[1], {}, cfg.resolution,
                "delta " + std::to_string(cfg.delta) + ", t = " + wronski::to_string(*cfg.t)};
  spec.window = cfg.window ? *cfg.window
                           : fitted_window(realroots::count_real_intersections(spec.f, spec.g, 0, true).points);
  return plot_curves(spec);
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw Error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename into " + path + ": " + ec.message());
  }
}

}  // namespace wronski::harness
