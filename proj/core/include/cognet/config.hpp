#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cognet/planner.hpp"
#include "cognet/scenario.hpp"

namespace cognet {

struct McSettings {
  std::int64_t realizations = 10000;
  std::uint64_t seed = 1;
  // Region radius used by simulations; the scenario's R when unset.
  std::optional<double> region_radius;
  std::int64_t placements = 10000;  // random-placement averaging
};

enum class SweepVariable { rho, tau, m_primary, m_secondary, region_radius, lambda_s };
enum class GridScale { linear, log };

struct SweepSpec {
  SweepVariable variable = SweepVariable::rho;
  GridScale scale = GridScale::log;
  double lo = 1e-15;
  double hi = 1e-3;
  int count = 61;
  double tau_db = 0.0;                    // fixed threshold when not swept
  std::vector<int> m_values{1, 2, 4, 8};  // element counts for M sweeps and per-M outputs

  std::vector<std::string> problems() const;
  std::vector<double> points() const;
};

struct MapFieldSpec {
  int resolution = 64;
  double extent = 200.0;  // half-width of the grid, m
  double omega_deg = 180.0;
};

struct Config {
  Scenario scenario = default_scenario();
  McSettings mc;
  SweepSpec sweep;
  QoSConstraint qos{0.7, 0.5, 1.0};
  MapFieldSpec map_field;
  std::vector<std::string> warnings;
};

// Parses a JSON document. Every schema violation is collected and reported
// together in a ConfigError. Missing keys keep their defaults.
Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

}  // namespace cognet
