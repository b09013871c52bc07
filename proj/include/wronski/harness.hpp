#pragma once

// Experiment orchestration: seeded campaigns, reports bundling the library
// outputs, run records and SVG renderings of curve pairs.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "wronski/polysys.hpp"
#include "wronski/rational.hpp"

namespace wronski::harness {

using polysys::Colors;
using poly::Polynomial;

std::string version();

// ---- seeds and draws ----------------------------------------------------

std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of instance `index` under `master`: splitmix64 applied to
/// master + (index + 1) * golden gamma, so any instance can be replayed alone.
std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index);

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Exact dyadic draw lo + (hi - lo) * u / 2^64 from one 64-bit word u.
Rational dyadic(std::uint64_t u, const Interval& range);

// ---- configuration ------------------------------------------------------

enum class Kind { montecarlo, pair, meta, triangulate, orient, heights, plot };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

struct ExperimentConfig {
  Kind kind = Kind::montecarlo;
  std::int64_t delta = 3;
  std::string height = "rho";  // "rho", "min" or a JSON file
  std::string polygon;         // orient: "" for delta*Delta_2, "hexagon" or a triangulation file
  std::optional<std::uint64_t> seed;
  std::size_t n = 1;
  Interval t_range{-1, 1};
  Interval c_range{-50, 50};
  std::optional<Rational> t;
  std::optional<Colors> c;
  std::optional<Colors> c_prime;
  polysys::Kappa kappa;
  bool eliminate = false;
  std::optional<Interval> t0_scan;
  std::optional<std::array<double, 4>> window;  // xmin, xmax, ymin, ymax; fitted when absent
  int resolution = 512;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";

  /// Throws DomainError on empty ranges, n = 0, a missing seed for the
  /// Monte Carlo kind, or a resolution below 32.
  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

struct RunRecord {
  nlohmann::json config;
  nlohmann::json instances = nlohmann::json::array();
  std::map<long, std::size_t> histogram;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> warnings;
  double wall_seconds = 0;
  std::map<std::string, double> timings;
  std::string version = harness::version();
};

/// Timing fields are dropped when `with_timing` is false, so that two runs
/// of the same configuration serialize identically.
nlohmann::json to_json(const RunRecord& r, bool with_timing = true);
/// One row per instance; columns are the union of instance keys.
std::string to_csv(const RunRecord& r);

// ---- experiments --------------------------------------------------------

/// Wronski pairs on the hexagon with t drawn from t_range (|t| < 2^-30
/// redrawn) and six colour parameters from c_range (zeros redrawn).
/// Degenerate instances are redrawn up to 16 times.
RunRecord monte_carlo_hexagon(const ExperimentConfig& cfg);

RunRecord pair_experiment(const ExperimentConfig& cfg);
RunRecord meta_report(const ExperimentConfig& cfg);
RunRecord triangulation_report(const ExperimentConfig& cfg);
RunRecord orientability_report(const ExperimentConfig& cfg);
RunRecord heights_report(const ExperimentConfig& cfg);

// ---- plotting -----------------------------------------------------------

struct PlotSpec {
  Polynomial f;
  Polynomial g;
  std::array<double, 4> window{-2, 2, -2, 2};
  int resolution = 512;
  std::string title;
};

struct Plot {
  std::string svg;
  std::size_t markers = 0;
  std::vector<std::string> warnings;
};

/// Zero contours of f and g by marching squares, with markers at the real
/// intersection points inside the window.
Plot plot_curves(const PlotSpec& spec);
/// The Wronski pair described by cfg (delta, height, t, c, c_prime).
Plot plot_curves(const ExperimentConfig& cfg);

/// Writes through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace wronski::harness
