#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cognet/access.hpp"
#include "cognet/config.hpp"
#include "cognet/coverage_primary.hpp"
#include "cognet/coverage_secondary.hpp"
#include "cognet/errors.hpp"
#include "cognet/montecarlo.hpp"
#include "cognet/parallel.hpp"
#include "cognet/planner.hpp"

namespace cognet {

namespace {

using json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

class Csv {
 public:
  Csv(std::ostream& os, std::initializer_list<const char*> header) : os_(os) {
    bool first = true;
    for (const char* h : header) {
      os_ << (first ? "" : ",") << h;
      first = false;
    }
    os_ << '\n';
  }

  template <class... T>
  void row(const T&... cells) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
    os_ << '\n';
  }

 private:
  static std::string cell(double v) { return num(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::int64_t v) { return std::to_string(v); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }

  std::ostream& os_;
};

struct SweepPoint {
  int m_primary = 1;
  int m_secondary = 1;
  Scenario sc;
  double tau = 1.0;
};

// Expands the sweep into scenarios. Element-count sweeps run against every
// entry of m_values for the other side; other sweeps use M_p = M_s = M for
// each entry of m_values.
std::vector<SweepPoint> expand_sweep(const Config& c) {
  const SweepSpec& sw = c.sweep;
  std::vector<SweepPoint> out;
  const auto make = [&](int mp, int ms, double value) {
    SweepPoint p;
    p.m_primary = mp;
    p.m_secondary = ms;
    p.sc = c.scenario;
    set_ula_patterns(p.sc, mp, ms);
    p.tau = db_to_linear(sw.tau_db);
    switch (sw.variable) {
      case SweepVariable::rho: p.sc.rho = value; break;
      case SweepVariable::tau: p.tau = db_to_linear(value); break;
      case SweepVariable::region_radius: p.sc.region_radius = value; break;
      case SweepVariable::lambda_s: p.sc.lambda_s = value; break;
      case SweepVariable::m_primary:
      case SweepVariable::m_secondary: break;
    }
    if (p.sc.placement.is_random() && sw.variable == SweepVariable::region_radius)
      p.sc.placement = PrimaryPlacement::random(value, p.sc.placement.law());
    out.push_back(std::move(p));
  };
  if (sw.variable == SweepVariable::m_primary || sw.variable == SweepVariable::m_secondary) {
    std::set<int> ms;
    for (double v : sw.points()) ms.insert(std::max(1, static_cast<int>(std::lround(v))));
    for (int other : sw.m_values)
      for (int m : ms) {
        if (sw.variable == SweepVariable::m_primary)
          make(m, other, m);
        else
          make(other, m, m);
      }
  } else {
    for (int m : sw.m_values)
      for (double v : sw.points()) make(m, m, v);
  }
  return out;
}

int cmd_map_field(const Config& c, std::ostream& os) {
  const MapFieldSpec& mf = c.map_field;
  const Angle omega = Angle::from_degrees(mf.omega_deg);
  Csv csv(os, {"x_m", "y_m", "omega_deg", "map"});
  const int n = mf.resolution;
  for (int j = 0; j < n; ++j) {
    const double y = -mf.extent + 2.0 * mf.extent * j / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double x = -mf.extent + 2.0 * mf.extent * i / (n - 1);
      const SecondaryLink link{PolarPoint::from_cartesian({x, y}), omega, c.scenario.r_s};
      csv.row(x, y, mf.omega_deg, map_primary_frame(link, c.scenario));
    }
  }
  return kExitOk;
}

int cmd_af_sweep(const Config& c, std::ostream& os, int threads) {
  const auto pts = expand_sweep(c);
  std::vector<double> af(pts.size());
  parallel_for(static_cast<std::int64_t>(pts.size()), threads,
               [&](std::int64_t i) { af[i] = activity_factor(pts[i].sc); });
  Csv csv(os, {"m_primary", "m_secondary", "rho_w", "lambda_s_per_m2", "region_radius_m", "af"});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Scenario& sc = pts[i].sc;
    csv.row(pts[i].m_primary, pts[i].m_secondary, sc.rho, sc.lambda_s, sc.region_radius, af[i]);
  }
  return kExitOk;
}

int cmd_coverage_sweep(const Config& c, std::ostream& os, int threads) {
  const auto pts = expand_sweep(c);
  std::vector<double> p_cp(pts.size()), p_cs(pts.size());
  const bool random = c.scenario.placement.is_random();
  // Random placements are averaged point by point with the same seed, so each
  // row is reproducible on its own; the averaging itself is parallel.
  parallel_for(static_cast<std::int64_t>(pts.size()), random ? 1 : threads, [&](std::int64_t i) {
    const SweepPoint& p = pts[i];
    p_cp[i] = coverage_primary_simplified(p.tau, p.sc);
    p_cs[i] = random ? coverage_secondary_averaged(p.tau, p.sc, c.mc.placements, c.mc.seed, threads).mean
                     : coverage_secondary(p.tau, p.sc);
  });
  Csv csv(os, {"m_primary", "m_secondary", "tau_db", "rho_w", "lambda_s_per_m2", "region_radius_m", "p_cp",
               "p_cs", "p_c"});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Scenario& sc = pts[i].sc;
    csv.row(pts[i].m_primary, pts[i].m_secondary, linear_to_db(pts[i].tau), sc.rho, sc.lambda_s,
            sc.region_radius, p_cp[i], p_cs[i], p_cp[i] + p_cs[i]);
  }
  return kExitOk;
}

int cmd_find_rho(const Config& c, std::ostream& os, int threads) {
  json doc;
  doc["qos"] = {{"p_star", c.qos.p_star}, {"s_star", c.qos.s_star}, {"tau_db", linear_to_db(c.qos.tau)}};
  doc["placement"] = c.scenario.placement.is_random() ? "random" : "fixed";
  json rows = json::array();
  for (int m : c.sweep.m_values) {
    Scenario sc = c.scenario;
    set_ula_patterns(sc, m, m);
    PlannerOptions opt;
    opt.seed = c.mc.seed;
    opt.n_placements = c.mc.placements;
    opt.threads = threads;
    const RhoSearchResult r = find_rho_dagger(c.qos, sc, opt);
    json row = {{"M", m}, {"feasible", r.feasible}};
    if (r.feasible) {
      row["rho_dagger_w"] = r.rho_dagger;
      row["p_cp"] = r.p_cp;
      row["p_cs"] = r.p_cs;
    } else {
      row["rho_dagger_w"] = nullptr;
      double best = 0.0;
      for (const auto& t : r.trace) best = std::max(best, t.p_cp);
      row["max_p_cp"] = best;
    }
    rows.push_back(row);
  }
  doc["results"] = rows;
  os << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_validate(const Config& c, std::ostream& os, int threads) {
  Scenario sc = c.scenario;
  if (c.mc.region_radius) {
    sc.region_radius = *c.mc.region_radius;
    if (sc.placement.is_random()) sc.placement = PrimaryPlacement::random(sc.region_radius, sc.placement.law());
  }
  const std::int64_t n = c.mc.realizations;
  const std::uint64_t seed = c.mc.seed;
  const double tau = c.qos.tau;
  struct Row {
    std::string name;
    double analytic;
    double analytic_se;
    EstimateWithCI mc;
  };
  std::vector<Row> rows;
  if (sc.lambda_s > 0.0) rows.push_back({"af", activity_factor(sc), 0.0, estimate_af(sc, n, seed, threads)});
  rows.push_back({"p_cp", coverage_primary_exact(tau, sc), 0.0,
                  estimate_coverage_primary(tau, sc, n, seed + 1, threads)});
  if (sc.placement.is_random()) {
    const EstimateWithCI avg = coverage_secondary_averaged(tau, sc, c.mc.placements, seed + 3, threads);
    rows.push_back({"p_cs", avg.mean, avg.std_error, estimate_coverage_secondary(tau, sc, n, seed + 2, threads)});
  } else {
    rows.push_back({"p_cs", coverage_secondary(tau, sc), 0.0,
                    estimate_coverage_secondary(tau, sc, n, seed + 2, threads)});
  }
  Csv csv(os, {"quantity", "analytic", "mc_mean", "mc_se", "z"});
  bool ok = true;
  for (const Row& r : rows) {
    const double se = std::hypot(r.mc.std_error, r.analytic_se);
    const double z = se > 0.0 ? (r.mc.mean - r.analytic) / se : (r.mc.mean == r.analytic ? 0.0 : INFINITY);
    ok = ok && std::abs(z) <= 4.0;
    csv.row(r.name, r.analytic, r.mc.mean, r.mc.std_error, z);
  }
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directional spectrum-sharing coverage analysis"};
  std::string command;
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  app.add_option("--command", command, "map-field | af-sweep | coverage-sweep | find-rho | validate")
      ->required()
      ->check(CLI::IsMember({"map-field", "af-sweep", "coverage-sweep", "find-rho", "validate"}));
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--seed", seed, "master seed (overrides mc.seed)");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--threads", threads, "worker threads (default COGNET_THREADS or hardware)")
      ->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    Config c = config_path.empty() ? Config{} : load_config(config_path);
    for (const auto& w : c.warnings) err << "warning: " << w << '\n';
    if (seed) c.mc.seed = *seed;
    const int n_threads = threads ? *threads : default_thread_count();

    std::ostringstream buf;
    int code = kExitOk;
    if (command == "map-field")
      code = cmd_map_field(c, buf);
    else if (command == "af-sweep")
      code = cmd_af_sweep(c, buf, n_threads);
    else if (command == "coverage-sweep")
      code = cmd_coverage_sweep(c, buf, n_threads);
    else if (command == "find-rho")
      code = cmd_find_rho(c, buf, n_threads);
    else
      code = cmd_validate(c, buf, n_threads);

    if (out_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        err << "cannot write " << out_path << '\n';
        return kExitUsage;
      }
      f << buf.str();
    }
    if (code == kExitValidation) err << "validation failed: |z| > 4\n";
    return code;
  } catch (const ConfigError& e) {
    err << "config error:";
    for (const auto& p : e.problems()) err << "\n  " << p;
    err << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << " (best estimate " << e.best_estimate() << ", error "
        << e.achieved_error() << ")\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace cognet
