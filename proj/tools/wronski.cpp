// wronski: command-line front end for the experiment harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wronski/errors.hpp"
#include "wronski/harness.hpp"

using namespace wronski;
using harness::ExperimentConfig;
using harness::Kind;

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::optional<std::int64_t> delta;
  std::string height;
  std::string polygon;
  std::string t;
  std::string c;
  std::string c_prime;
  std::optional<std::size_t> n;
  std::string t_range;
  std::string c_range;
  std::optional<unsigned> threads;
  bool eliminate = false;
  std::vector<std::string> t0_scan;
  std::string dump;
  bool check_cone = false;
  bool count = false;
  std::vector<double> window;
  std::optional<int> resolution;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

harness::Colors colors(const std::string& s) {
  const auto parts = split(s);
  if (parts.size() != 3) throw DomainError("expected three comma-separated values, got '" + s + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

harness::Interval interval(const std::string& s) {
  const auto parts = split(s);
  if (parts.size() != 2) throw DomainError("expected 'lo,hi', got '" + s + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

ExperimentConfig build(Kind kind, const Options& o) {
  ExperimentConfig cfg;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw DomainError("cannot read configuration " + o.config);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("malformed configuration: ") + e.what());
    }
    cfg = harness::config_from_json(j);
  }
  cfg.kind = kind;
  if (o.seed) cfg.seed = o.seed;
  if (!o.out.empty()) cfg.out = o.out;
  if (!o.format.empty()) cfg.format = o.format;
  if (o.delta) cfg.delta = *o.delta;
  if (!o.height.empty()) cfg.height = o.height;
  if (!o.polygon.empty()) cfg.polygon = o.polygon;
  if (!o.t.empty()) cfg.t = parse_rational(o.t);
  if (!o.c.empty()) cfg.c = colors(o.c);
  if (!o.c_prime.empty()) cfg.c_prime = colors(o.c_prime);
  if (o.n) cfg.n = *o.n;
  if (!o.t_range.empty()) cfg.t_range = interval(o.t_range);
  if (!o.c_range.empty()) cfg.c_range = interval(o.c_range);
  if (o.threads) cfg.threads = *o.threads;
  if (o.eliminate || !o.t0_scan.empty()) cfg.eliminate = true;
  if (!o.t0_scan.empty()) cfg.t0_scan = harness::Interval{parse_rational(o.t0_scan[0]), parse_rational(o.t0_scan[1])};
  if (!o.window.empty()) cfg.window = std::array<double, 4>{o.window[0], o.window[1], o.window[2], o.window[3]};
  if (o.resolution) cfg.resolution = *o.resolution;
  if (kind == Kind::plot && o.format.empty()) cfg.format = "svg";
  cfg.validate();
  return cfg;
}

void emit(const ExperimentConfig& cfg, const std::string& text) {
  if (cfg.out.empty())
    std::cout << text;
  else
    harness::write_atomically(cfg.out, text);
}

void emit_record(const ExperimentConfig& cfg, const harness::RunRecord& rec) {
  for (const auto& w : rec.warnings) std::cerr << "warning: " << w << '\n';
  if (cfg.format == "csv")
    emit(cfg, harness::to_csv(rec));
  else if (cfg.format == "json")
    emit(cfg, harness::to_json(rec).dump(2) + "\n");
  else
    throw DomainError("format " + cfg.format + " is only available for plot");
}

int run(Kind kind, const Options& o) {
  const auto cfg = build(kind, o);
  switch (kind) {
    case Kind::triangulate:
      emit_record(cfg, harness::triangulation_report(cfg));
      break;
    case Kind::orient:
      emit_record(cfg, harness::orientability_report(cfg));
      break;
    case Kind::heights: {
      const auto rec = harness::heights_report(cfg);
      emit_record(cfg, rec);
      if (o.check_cone && !rec.summary["in_cone"].get<bool>()) {
        std::cerr << "height is outside the secondary cone\n";
        return 1;
      }
      break;
    }
    case Kind::meta: {
      const auto rec = harness::meta_report(cfg);
      if (!o.dump.empty()) {
        std::string text;
        for (const auto& f : rec.summary["system"]) text += f.get<std::string>() + "\n";
        if (o.dump == "-")
          std::cout << text;
        else
          harness::write_atomically(o.dump, text);
      }
      if (o.dump != "-") emit_record(cfg, rec);
      break;
    }
    case Kind::pair:
      emit_record(cfg, harness::pair_experiment(cfg));
      break;
    case Kind::montecarlo:
      emit_record(cfg, harness::monte_carlo_hexagon(cfg));
      break;
    case Kind::plot: {
      const auto plot = harness::plot_curves(cfg);
      for (const auto& w : plot.warnings) std::cerr << "warning: " << w << '\n';
      if (cfg.format != "svg") throw DomainError("plot writes svg only");
      emit(cfg, plot.svg);
      std::cerr << plot.markers << " intersection markers\n";
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wronski systems on lattice triangulations: lower bounds, meta-systems and experiments"};
  app.set_version_flag("--version", harness::version());
  app.require_subcommand(1);
  Options o;

  app.add_option("--config", o.config, "JSON file mirroring the experiment configuration");
  app.add_option("--seed", o.seed, "master seed (64-bit)");
  app.add_option("--out", o.out, "output file (written atomically); stdout when omitted");
  app.add_option("--format", o.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));

  const auto add_delta = [&](CLI::App* s) { s->add_option("--delta,-d", o.delta, "dilation factor")->check(CLI::PositiveNumber); };
  const auto add_height = [&](CLI::App* s) { s->add_option("--height", o.height, "rho, min or a JSON height file"); };
  const auto add_pair = [&](CLI::App* s) {
    s->add_option("--t", o.t, "deformation parameter, exact decimal or p/q");
    s->add_option("--c", o.c, "colour parameters a,b,c of the first polynomial");
    s->add_option("--cprime", o.c_prime, "colour parameters of the second polynomial");
  };

  auto* tri = app.add_subcommand("triangulate", "honeycomb triangulation: f-vector, signature, cone data");
  add_delta(tri);
  add_height(tri);

  auto* ori = app.add_subcommand("orient", "orientability of the toric variety of a polygon");
  add_delta(ori);
  ori->add_option("--polygon", o.polygon, "hexagon or a triangulation JSON file (default: delta*Delta_2)");

  auto* hts = app.add_subcommand("heights", "height function and secondary cone membership");
  add_delta(hts);
  add_height(hts);
  hts->add_flag("--check-cone", o.check_cone, "exit with status 1 when the height is outside the cone");

  auto* meta = app.add_subcommand("meta", "meta-system, boundary faces and elimination to t");
  add_delta(meta);
  add_height(meta);
  meta->add_flag("--eliminate", o.eliminate, "compute the eliminant in t");
  meta->add_option("--t0-scan", o.t0_scan, "range (A, B] of t to certify")->expected(2);
  meta->add_option("--dump", o.dump, "write the three polynomials to FILE ('-' for stdout only)");

  auto* pair = app.add_subcommand("pair", "real intersections of a Wronski pair");
  add_delta(pair);
  add_height(pair);
  add_pair(pair);
  pair->add_flag("--count", o.count, "count real intersections (the default action)");

  auto* mc = app.add_subcommand("montecarlo", "random Wronski pairs on the hexagon");
  mc->add_option("--n", o.n, "number of instances")->check(CLI::PositiveNumber);
  mc->add_option("--t-range", o.t_range, "lo,hi for t");
  mc->add_option("--c-range", o.c_range, "lo,hi for the colour parameters");
  mc->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* plot = app.add_subcommand("plot", "SVG of the two curves of a Wronski pair");
  add_delta(plot);
  add_height(plot);
  add_pair(plot);
  plot->add_option("--window", o.window, "xmin xmax ymin ymax")->expected(4);
  plot->add_option("--resolution", o.resolution, "marching squares grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::vector<std::pair<CLI::App*, Kind>> kinds{{tri, Kind::triangulate}, {ori, Kind::orient},
                                                      {hts, Kind::heights},     {meta, Kind::meta},
                                                      {pair, Kind::pair},       {mc, Kind::montecarlo},
                                                      {plot, Kind::plot}};
  try {
    for (const auto& [sub, kind] : kinds)
      if (sub->parsed()) return run(kind, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
