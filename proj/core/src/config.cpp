#include "cognet/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cognet/errors.hpp"

namespace cognet {

ConfigError::ConfigError(std::vector<std::string> problems)
    : Error([&] {
        std::string msg = "invalid configuration";
        for (const auto& p : problems) msg += "\n  " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

std::vector<std::string> SweepSpec::problems() const {
  std::vector<std::string> out;
  if (count < 2) out.emplace_back("sweep.count must be >= 2");
  if (!(hi > lo)) out.emplace_back("sweep.max must exceed sweep.min");
  if (scale == GridScale::log && !(lo > 0.0)) out.emplace_back("sweep.min must be > 0 on a log grid");
  const bool positive = variable != SweepVariable::tau;
  if (positive && !(lo > 0.0) && scale == GridScale::linear)
    out.emplace_back("sweep.min must be > 0 for this variable");
  for (int m : m_values)
    if (m < 1) out.emplace_back("sweep.m_values entries must be >= 1");
  return out;
}

std::vector<double> SweepSpec::points() const {
  auto p = problems();
  if (!p.empty()) throw ConfigError(std::move(p));
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out.push_back(scale == GridScale::log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
  }
  out.back() = hi;
  return out;
}

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::vector<std::string>& errs) : errs_(errs) {}

  // Reports keys of `obj` that are not in `known`.
  void known_keys(const json& obj, const std::string& path, std::set<std::string> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!known.count(it.key())) errs_.push_back(path + "." + it.key() + ": unknown key");
  }

  bool object(const json& j, const std::string& path) {
    if (j.is_object()) return true;
    errs_.push_back(path + ": expected an object");
    return false;
  }

  std::optional<double> number(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_number()) {
      errs_.push_back(path + "." + key + ": expected a number");
      return std::nullopt;
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
      errs_.push_back(path + "." + key + ": must be finite");
      return std::nullopt;
    }
    return d;
  }

  std::optional<std::int64_t> integer(const json& obj, const std::string& key,
                                      const std::string& path) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
      errs_.push_back(path + "." + key + ": expected an integer");
      return std::nullopt;
    }
    return v.get<std::int64_t>();
  }

  std::optional<std::string> string(const json& obj, const std::string& key,
                                    const std::string& path) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_string()) {
      errs_.push_back(path + "." + key + ": expected a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  void error(std::string msg) { errs_.push_back(std::move(msg)); }

 private:
  std::vector<std::string>& errs_;
};

void read_power(Reader& r, const json& s, const std::string& name, double& target) {
  const auto w = r.number(s, name + "_w", "scenario");
  const auto dbm = r.number(s, name + "_dbm", "scenario");
  if (w && dbm) r.error("scenario." + name + ": give either " + name + "_w or " + name + "_dbm");
  if (w) target = *w;
  if (dbm) target = dbm_to_watts(*dbm);
}

void read_scenario(Reader& r, const json& s, Scenario& sc) {
  if (!r.object(s, "scenario")) return;
  r.known_keys(s, "scenario",
               {"alpha", "rho_w", "rho_dbm", "p_p_w", "p_p_dbm", "p_s_w", "p_s_dbm", "lambda_s",
                "r_p", "r_s", "sigma2", "noise", "region_radius"});
  if (auto v = r.number(s, "alpha", "scenario")) sc.alpha = *v;
  read_power(r, s, "rho", sc.rho);
  read_power(r, s, "p_p", sc.p_p);
  read_power(r, s, "p_s", sc.p_s);
  if (auto v = r.number(s, "lambda_s", "scenario")) sc.lambda_s = *v;
  if (auto v = r.number(s, "r_p", "scenario")) sc.r_p = *v;
  if (auto v = r.number(s, "r_s", "scenario")) sc.r_s = *v;
  if (auto v = r.number(s, "region_radius", "scenario")) sc.region_radius = *v;
  const auto sigma2 = r.number(s, "sigma2", "scenario");
  if (sigma2) sc.sigma2 = *sigma2;
  if (s.contains("noise")) {
    if (sigma2) r.error("scenario: give either sigma2 or noise, not both");
    const json& n = s.at("noise");
    if (r.object(n, "scenario.noise")) {
      r.known_keys(n, "scenario.noise", {"bandwidth_hz", "near_field_gain", "thermal_floor_dbm_per_hz"});
      NoiseDerivation nd;
      if (auto v = r.number(n, "bandwidth_hz", "scenario.noise")) nd.bandwidth_hz = *v;
      if (auto v = r.number(n, "near_field_gain", "scenario.noise")) nd.near_field_gain = *v;
      if (auto v = r.number(n, "thermal_floor_dbm_per_hz", "scenario.noise"))
        nd.thermal_floor_dbm_per_hz = *v;
      if (nd.bandwidth_hz > 0.0 && nd.near_field_gain > 0.0)
        sc.sigma2 = nd.sigma2();
      else
        r.error("scenario.noise: bandwidth_hz and near_field_gain must be > 0");
    }
  }
}

void read_pattern(Reader& r, const json& a, const std::string& path, BeamPattern& out,
                  std::vector<std::string>& warnings) {
  if (!r.object(a, path)) return;
  r.known_keys(a, path, {"type", "M", "kappa_deg", "a", "b", "phi_deg"});
  const std::string type = r.string(a, "type", path).value_or("omni");
  const auto m = r.integer(a, "M", path);
  const auto kappa = r.number(a, "kappa_deg", path);
  const auto ga = r.number(a, "a", path);
  const auto gb = r.number(a, "b", path);
  const auto phi = r.number(a, "phi_deg", path);
  if (type == "omni") {
    out = BeamPattern::omni();
  } else if (type == "ula") {
    const std::int64_t elements = m.value_or(1);
    const double k = kappa.value_or(kDefaultKappaDeg);
    if (elements < 1) {
      r.error(path + ".M: must be >= 1");
    } else if (!(k > 0.0 && k < 360.0)) {
      r.error(path + ".kappa_deg: must be in (0, 360)");
    } else {
      out = ula_or_omni(static_cast<int>(elements), k * kPi / 180.0);
    }
  } else if (type == "sectorized" || type == "ideal") {
    if (!ga || !phi) {
      r.error(path + ": " + type + " pattern needs a and phi_deg");
      return;
    }
    const double b = type == "ideal" ? 0.0 : gb.value_or(-1.0);
    if (type == "sectorized" && !gb) {
      r.error(path + ": sectorized pattern needs b");
      return;
    }
    if (!(*phi > 0.0 && *phi <= 360.0)) {
      r.error(path + ".phi_deg: must be in (0, 360]");
      return;
    }
    if (!(*ga >= 0.0) || !(b >= 0.0)) {
      r.error(path + ": gains must be >= 0");
      return;
    }
    const double w = *phi * kPi / 180.0;
    out = type == "ideal" ? BeamPattern::ideal(*ga, w) : BeamPattern::sectorized(*ga, b, w);
    const double res = out.normalization_residual();
    if (std::abs(res) > 1e-6) {
      std::ostringstream msg;
      msg << path << ": pattern is not power-normalized (a q + b (1 - q) - 1 = " << res << ")";
      warnings.push_back(msg.str());
    }
  } else {
    r.error(path + ".type: expected omni, sectorized, ideal or ula");
  }
}

void read_placement(Reader& r, const json& p, Config& c) {
  if (!r.object(p, "placement")) return;
  r.known_keys(p, "placement", {"type", "x_p", "delta_deg", "omega_deg", "radial_law"});
  RadialLaw law = RadialLaw::uniform_disk;
  if (auto s = r.string(p, "radial_law", "placement")) {
    if (*s == "uniform_disk")
      law = RadialLaw::uniform_disk;
    else if (*s == "half_radius")
      law = RadialLaw::half_radius;
    else
      r.error("placement.radial_law: expected uniform_disk or half_radius");
  }
  const auto type = r.integer(p, "type", "placement");
  const auto x = r.number(p, "x_p", "placement");
  const auto d = r.number(p, "delta_deg", "placement");
  const auto o = r.number(p, "omega_deg", "placement");
  const bool explicit_pose = x || d || o;
  if (type && explicit_pose) {
    r.error("placement: give either type or an explicit pose");
    return;
  }
  if (type) {
    if (*type < 1 || *type > 4) {
      r.error("placement.type: must be 1..4");
      return;
    }
    c.scenario.placement = preset_type(static_cast<int>(*type), c.scenario.region_radius, law);
  } else if (explicit_pose) {
    if (!x || !d || !o) {
      r.error("placement: explicit pose needs x_p, delta_deg and omega_deg");
      return;
    }
    if (!(*x >= 0.0)) {
      r.error("placement.x_p: must be >= 0");
      return;
    }
    c.scenario.placement =
        PrimaryPlacement::fixed({*x, Angle::from_degrees(*d), Angle::from_degrees(*o)});
  }
}

void read_mc(Reader& r, const json& m, McSettings& mc) {
  if (!r.object(m, "mc")) return;
  r.known_keys(m, "mc", {"realizations", "seed", "region_radius", "placements"});
  if (auto v = r.integer(m, "realizations", "mc")) {
    if (*v < 1) r.error("mc.realizations: must be >= 1");
    mc.realizations = *v;
  }
  if (m.contains("seed")) {
    if (m.at("seed").is_number_unsigned())
      mc.seed = m.at("seed").get<std::uint64_t>();
    else
      r.error("mc.seed: expected a non-negative integer");
  }
  if (auto v = r.number(m, "region_radius", "mc")) {
    if (!(*v > 0.0)) r.error("mc.region_radius: must be > 0");
    mc.region_radius = *v;
  }
  if (auto v = r.integer(m, "placements", "mc")) {
    if (*v < 1) r.error("mc.placements: must be >= 1");
    mc.placements = *v;
  }
}

void read_sweep(Reader& r, const json& s, SweepSpec& sw) {
  if (!r.object(s, "sweep")) return;
  r.known_keys(s, "sweep", {"variable", "scale", "min", "max", "count", "tau_db", "m_values"});
  if (auto v = r.string(s, "variable", "sweep")) {
    if (*v == "rho")
      sw.variable = SweepVariable::rho;
    else if (*v == "tau")
      sw.variable = SweepVariable::tau;
    else if (*v == "M_p")
      sw.variable = SweepVariable::m_primary;
    else if (*v == "M_s")
      sw.variable = SweepVariable::m_secondary;
    else if (*v == "R")
      sw.variable = SweepVariable::region_radius;
    else if (*v == "lambda_s")
      sw.variable = SweepVariable::lambda_s;
    else
      r.error("sweep.variable: expected rho, tau, M_p, M_s, R or lambda_s");
  }
  if (auto v = r.string(s, "scale", "sweep")) {
    if (*v == "log")
      sw.scale = GridScale::log;
    else if (*v == "linear")
      sw.scale = GridScale::linear;
    else
      r.error("sweep.scale: expected log or linear");
  }
  if (auto v = r.number(s, "min", "sweep")) sw.lo = *v;
  if (auto v = r.number(s, "max", "sweep")) sw.hi = *v;
  if (auto v = r.integer(s, "count", "sweep")) sw.count = static_cast<int>(*v);
  if (auto v = r.number(s, "tau_db", "sweep")) sw.tau_db = *v;
  if (s.contains("m_values")) {
    const json& m = s.at("m_values");
    if (!m.is_array() || m.empty()) {
      r.error("sweep.m_values: expected a non-empty array of integers");
    } else {
      sw.m_values.clear();
      for (const auto& e : m) {
        if (!e.is_number_integer()) {
          r.error("sweep.m_values: expected integers");
          break;
        }
        sw.m_values.push_back(e.get<int>());
      }
    }
  }
}

void read_qos(Reader& r, const json& q, QoSConstraint& qos) {
  if (!r.object(q, "qos")) return;
  r.known_keys(q, "qos", {"p_star", "s_star", "tau_db"});
  if (auto v = r.number(q, "p_star", "qos")) qos.p_star = *v;
  if (auto v = r.number(q, "s_star", "qos")) qos.s_star = *v;
  if (auto v = r.number(q, "tau_db", "qos")) qos.tau = db_to_linear(*v);
}

void read_map_field(Reader& r, const json& m, MapFieldSpec& mf) {
  if (!r.object(m, "map_field")) return;
  r.known_keys(m, "map_field", {"resolution", "extent", "omega_deg"});
  if (auto v = r.integer(m, "resolution", "map_field")) mf.resolution = static_cast<int>(*v);
  if (auto v = r.number(m, "extent", "map_field")) mf.extent = *v;
  if (auto v = r.number(m, "omega_deg", "map_field")) mf.omega_deg = *v;
}

}  // namespace

Config parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("malformed JSON: ") + e.what()});
  }
  std::vector<std::string> errs;
  Reader r(errs);
  Config c;
  if (!doc.is_object()) throw ConfigError({"top level: expected an object"});
  r.known_keys(doc, "config", {"scenario", "antenna", "placement", "mc", "sweep", "qos", "map_field"});
  if (doc.contains("scenario")) read_scenario(r, doc.at("scenario"), c.scenario);
  if (doc.contains("antenna")) {
    const json& a = doc.at("antenna");
    if (r.object(a, "antenna")) {
      r.known_keys(a, "antenna", {"pt", "pr", "st", "sr"});
      auto& p = c.scenario.patterns;
      if (a.contains("pt")) read_pattern(r, a.at("pt"), "antenna.pt", p.pt, c.warnings);
      if (a.contains("pr")) read_pattern(r, a.at("pr"), "antenna.pr", p.pr, c.warnings);
      if (a.contains("st")) read_pattern(r, a.at("st"), "antenna.st", p.st, c.warnings);
      if (a.contains("sr")) read_pattern(r, a.at("sr"), "antenna.sr", p.sr, c.warnings);
    }
  }
  if (doc.contains("placement")) read_placement(r, doc.at("placement"), c);
  if (doc.contains("mc")) read_mc(r, doc.at("mc"), c.mc);
  if (doc.contains("sweep")) read_sweep(r, doc.at("sweep"), c.sweep);
  if (doc.contains("qos")) read_qos(r, doc.at("qos"), c.qos);
  if (doc.contains("map_field")) read_map_field(r, doc.at("map_field"), c.map_field);

  for (auto& p : c.scenario.problems()) errs.push_back(std::move(p));
  for (auto& p : c.sweep.problems()) errs.push_back(std::move(p));
  for (auto& p : c.qos.problems()) errs.push_back(std::move(p));
  if (c.map_field.resolution < 16) errs.emplace_back("map_field.resolution must be >= 16");
  if (!(c.map_field.extent > 0.0)) errs.emplace_back("map_field.extent must be > 0");
  if (!errs.empty()) throw ConfigError(std::move(errs));
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file: " + path});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cognet
