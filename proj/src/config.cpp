#include "lambdasim/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lambdasim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument(message); }

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) fail("config: \"" + where + "\" must be an object");
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    bool found = false;
    for (const char* k : known)
      if (item.key() == k) {
        found = true;
        break;
      }
    if (!found) fail("config: unknown key \"" + item.key() + "\" in " + where);
  }
}

double get_number(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail("config: key \"" + key + "\" must be a number");
  return v.get<double>();
}

double get_positive(const json& obj, const std::string& key, double fallback) {
  const double x = get_number(obj, key, fallback);
  if (!(x > 0.0)) fail("config: out-of-range value for key \"" + key + "\": must be > 0");
  return x;
}

double get_non_negative(const json& obj, const std::string& key, double fallback) {
  const double x = get_number(obj, key, fallback);
  if (!(x >= 0.0)) fail("config: out-of-range value for key \"" + key + "\": must be >= 0");
  return x;
}

int get_int(const json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail("config: key \"" + key + "\" must be an integer");
  return v.get<int>();
}

bool get_bool(const json& obj, const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) fail("config: key \"" + key + "\" must be a boolean");
  return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) fail("config: key \"" + key + "\" must be a string");
  return v.get<std::string>();
}

// --- envelopes as tagged records ---

json envelope_to_json(const PulseEnvelope& env);

json envelope_to_json_impl(const PulseEnvelope::Constant& c) {
  return json{{"type", "constant"}, {"level", c.level}};
}
json envelope_to_json_impl(const PulseEnvelope::Gaussian& g) {
  return json{{"type", "gaussian"}, {"peak", g.peak}, {"center_ns", g.center_ns},
              {"fwhm_ns", g.fwhm_ns}};
}
json envelope_to_json_impl(const PulseEnvelope::Truncated& t) {
  return json{{"type", "truncated"}, {"inner", envelope_to_json(*t.inner)},
              {"cutoff_ns", t.cutoff_ns}, {"ramp_ns", t.ramp_ns}};
}
json envelope_to_json_impl(const PulseEnvelope::Scaled& s) {
  return json{{"type", "scaled"}, {"inner", envelope_to_json(*s.inner)}, {"factor", s.factor}};
}
json envelope_to_json_impl(const PulseEnvelope::Sum& s) {
  json parts = json::array();
  for (const auto& p : s.parts) parts.push_back(envelope_to_json(p));
  return json{{"type", "sum"}, {"parts", parts}};
}

json envelope_to_json(const PulseEnvelope& env) {
  return std::visit([](const auto& shape) { return envelope_to_json_impl(shape); },
                    env.shape());
}

PulseEnvelope envelope_from_json(const json& j, const std::string& where) {
  require_object(j, where);
  const std::string type = get_string(j, "type", "");
  if (type == "constant") {
    reject_unknown_keys(j, {"type", "level"}, where);
    return PulseEnvelope::constant(get_non_negative(j, "level", 0.0));
  }
  if (type == "gaussian") {
    reject_unknown_keys(j, {"type", "peak", "center_ns", "fwhm_ns"}, where);
    if (!j.contains("peak") || !j.contains("center_ns") || !j.contains("fwhm_ns"))
      fail("config: gaussian envelope in " + where +
           " needs keys \"peak\", \"center_ns\", \"fwhm_ns\"");
    return PulseEnvelope::gaussian(get_non_negative(j, "peak", 0.0),
                                   get_number(j, "center_ns", 0.0),
                                   get_positive(j, "fwhm_ns", 1.0));
  }
  if (type == "truncated") {
    reject_unknown_keys(j, {"type", "inner", "cutoff_ns", "ramp_ns"}, where);
    if (!j.contains("inner"))
      fail("config: truncated envelope in " + where + " needs key \"inner\"");
    return PulseEnvelope::truncated(envelope_from_json(j.at("inner"), where + ".inner"),
                                    get_number(j, "cutoff_ns", 0.0),
                                    get_positive(j, "ramp_ns", 1.0));
  }
  if (type == "scaled") {
    reject_unknown_keys(j, {"type", "inner", "factor"}, where);
    if (!j.contains("inner"))
      fail("config: scaled envelope in " + where + " needs key \"inner\"");
    return PulseEnvelope::scaled(envelope_from_json(j.at("inner"), where + ".inner"),
                                 get_non_negative(j, "factor", 1.0));
  }
  if (type == "sum") {
    reject_unknown_keys(j, {"type", "parts"}, where);
    if (!j.contains("parts") || !j.at("parts").is_array() || j.at("parts").empty())
      fail("config: sum envelope in " + where + " needs a non-empty \"parts\" array");
    std::vector<PulseEnvelope> parts;
    for (const auto& p : j.at("parts"))
      parts.push_back(envelope_from_json(p, where + ".parts"));
    return PulseEnvelope::sum(std::move(parts));
  }
  fail("config: envelope in " + where +
       " has unknown \"type\" (expected constant|gaussian|truncated|scaled|sum)");
}

// --- system / medium / grid ---

LambdaSystem system_from_json(const json& j, const LambdaSystem& defaults,
                              const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j,
                      {"delta_one_photon", "delta_two_photon", "gamma_excited", "branch_to_1",
                       "gamma_ground"},
                      where);
  LambdaSystem sys = defaults;
  sys.delta_one_photon = get_number(j, "delta_one_photon", defaults.delta_one_photon);
  sys.delta_two_photon = get_number(j, "delta_two_photon", defaults.delta_two_photon);
  sys.gamma_excited = get_non_negative(j, "gamma_excited", defaults.gamma_excited);
  sys.branch_to_1 = get_number(j, "branch_to_1", defaults.branch_to_1);
  if (!(sys.branch_to_1 >= 0.0 && sys.branch_to_1 <= 1.0))
    fail("config: out-of-range value for key \"branch_to_1\": must lie in [0,1]");
  sys.gamma_ground = get_non_negative(j, "gamma_ground", defaults.gamma_ground);
  return sys;
}

json system_to_json(const LambdaSystem& sys) {
  return json{{"delta_one_photon", sys.delta_one_photon},
              {"delta_two_photon", sys.delta_two_photon},
              {"gamma_excited", sys.gamma_excited},
              {"branch_to_1", sys.branch_to_1},
              {"gamma_ground", sys.gamma_ground}};
}

FwmMedium medium_from_json(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j,
                      {"number_density_cm3", "omega_fwm", "mu_13", "mu_23", "delta_probe",
                       "length_m"},
                      where);
  FwmMedium medium;
  medium.number_density_cm3 = get_positive(j, "number_density_cm3", medium.number_density_cm3);
  medium.omega_fwm = get_positive(j, "omega_fwm", medium.omega_fwm);
  medium.mu_13 = get_positive(j, "mu_13", medium.mu_13);
  medium.mu_23 = get_positive(j, "mu_23", medium.mu_23);
  medium.delta_probe = get_number(j, "delta_probe", medium.delta_probe);
  if (medium.delta_probe == 0.0)
    fail("config: out-of-range value for key \"delta_probe\": must be nonzero");
  medium.length_m = get_positive(j, "length_m", medium.length_m);
  return medium;
}

json medium_to_json(const FwmMedium& m) {
  return json{{"number_density_cm3", m.number_density_cm3}, {"omega_fwm", m.omega_fwm},
              {"mu_13", m.mu_13},                           {"mu_23", m.mu_23},
              {"delta_probe", m.delta_probe},               {"length_m", m.length_m}};
}

TimeGrid grid_from_json(const json& j, const TimeGrid& defaults, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j, {"t_start_ns", "t_end_ns", "dt_ns", "sample_every"}, where);
  TimeGrid grid = defaults;
  grid.t_start_ns = get_number(j, "t_start_ns", defaults.t_start_ns);
  grid.t_end_ns = get_number(j, "t_end_ns", defaults.t_end_ns);
  grid.dt_ns = get_positive(j, "dt_ns", defaults.dt_ns);
  grid.sample_every = get_int(j, "sample_every", defaults.sample_every);
  if (grid.sample_every < 1)
    fail("config: out-of-range value for key \"sample_every\": must be >= 1");
  return grid;
}

json grid_to_json(const TimeGrid& g) {
  return json{{"t_start_ns", g.t_start_ns},
              {"t_end_ns", g.t_end_ns},
              {"dt_ns", g.dt_ns},
              {"sample_every", g.sample_every}};
}

// --- scenario overrides ---

void apply_fstirap_overrides(const json& j, FstirapParams& p) {
  reject_unknown_keys(j,
                      {"peak_pump", "peak_stokes", "intensity_fwhm_pump_ns",
                       "intensity_fwhm_stokes_ns", "pump_center_ns", "stokes_advance_ns",
                       "cutoff_ns", "ramp_ns", "probe_peak", "probe_intensity_fwhm_ns",
                       "delta_one_photon", "delta_two_photon", "gamma_excited", "branch_to_1",
                       "gamma_ground", "tail_ns", "dt_ns", "sample_every"},
                      "overrides");
  p.peak_pump = get_non_negative(j, "peak_pump", p.peak_pump);
  p.peak_stokes = get_positive(j, "peak_stokes", p.peak_stokes);
  p.intensity_fwhm_pump_ns = get_positive(j, "intensity_fwhm_pump_ns", p.intensity_fwhm_pump_ns);
  p.intensity_fwhm_stokes_ns =
      get_positive(j, "intensity_fwhm_stokes_ns", p.intensity_fwhm_stokes_ns);
  p.pump_center_ns = get_number(j, "pump_center_ns", p.pump_center_ns);
  // A moved pump center carries the cutoff with it unless the cutoff is
  // pinned explicitly.
  p.cutoff_ns = get_number(j, "cutoff_ns",
                           j.contains("pump_center_ns") ? p.pump_center_ns : p.cutoff_ns);
  p.stokes_advance_ns = get_positive(j, "stokes_advance_ns", p.stokes_advance_ns);
  p.ramp_ns = get_positive(j, "ramp_ns", p.ramp_ns);
  p.probe_peak = get_non_negative(j, "probe_peak", p.probe_peak);
  p.probe_intensity_fwhm_ns =
      get_positive(j, "probe_intensity_fwhm_ns", p.probe_intensity_fwhm_ns);
  p.system.delta_one_photon = get_number(j, "delta_one_photon", p.system.delta_one_photon);
  p.system.delta_two_photon = get_number(j, "delta_two_photon", p.system.delta_two_photon);
  p.system.gamma_excited = get_non_negative(j, "gamma_excited", p.system.gamma_excited);
  p.system.branch_to_1 = get_number(j, "branch_to_1", p.system.branch_to_1);
  if (!(p.system.branch_to_1 >= 0.0 && p.system.branch_to_1 <= 1.0))
    fail("config: out-of-range value for key \"branch_to_1\": must lie in [0,1]");
  p.system.gamma_ground = get_non_negative(j, "gamma_ground", p.system.gamma_ground);
  p.tail_ns = get_positive(j, "tail_ns", p.tail_ns);
  p.dt_ns = get_positive(j, "dt_ns", p.dt_ns);
  p.sample_every = get_int(j, "sample_every", p.sample_every);
  if (p.sample_every < 1)
    fail("config: out-of-range value for key \"sample_every\": must be >= 1");
}

json fstirap_to_json(const FstirapParams& p) {
  json j = system_to_json(p.system);
  j["peak_pump"] = p.peak_pump;
  j["peak_stokes"] = p.peak_stokes;
  j["intensity_fwhm_pump_ns"] = p.intensity_fwhm_pump_ns;
  j["intensity_fwhm_stokes_ns"] = p.intensity_fwhm_stokes_ns;
  j["pump_center_ns"] = p.pump_center_ns;
  j["stokes_advance_ns"] = p.stokes_advance_ns;
  j["cutoff_ns"] = p.cutoff_ns;
  j["ramp_ns"] = p.ramp_ns;
  j["probe_peak"] = p.probe_peak;
  j["probe_intensity_fwhm_ns"] = p.probe_intensity_fwhm_ns;
  j["tail_ns"] = p.tail_ns;
  j["dt_ns"] = p.dt_ns;
  j["sample_every"] = p.sample_every;
  return j;
}

void apply_cpr_overrides(const json& j, CprParams& p) {
  reject_unknown_keys(j,
                      {"pump_level", "stokes_center_ns", "stokes_fwhm_rabi_ns", "probe_level",
                       "delta_one_photon", "delta_two_photon", "gamma_excited", "branch_to_1",
                       "gamma_ground", "t_end_ns", "dt_ns", "sample_every"},
                      "overrides");
  p.pump_level = get_non_negative(j, "pump_level", p.pump_level);
  p.stokes_center_ns = get_number(j, "stokes_center_ns", p.stokes_center_ns);
  p.stokes_fwhm_rabi_ns = get_positive(j, "stokes_fwhm_rabi_ns", p.stokes_fwhm_rabi_ns);
  p.probe_level = get_non_negative(j, "probe_level", p.probe_level);
  p.system.delta_one_photon = get_number(j, "delta_one_photon", p.system.delta_one_photon);
  p.system.delta_two_photon = get_number(j, "delta_two_photon", p.system.delta_two_photon);
  p.system.gamma_excited = get_non_negative(j, "gamma_excited", p.system.gamma_excited);
  p.system.branch_to_1 = get_number(j, "branch_to_1", p.system.branch_to_1);
  if (!(p.system.branch_to_1 >= 0.0 && p.system.branch_to_1 <= 1.0))
    fail("config: out-of-range value for key \"branch_to_1\": must lie in [0,1]");
  p.system.gamma_ground = get_non_negative(j, "gamma_ground", p.system.gamma_ground);
  p.t_end_ns = get_positive(j, "t_end_ns", p.t_end_ns);
  p.dt_ns = get_positive(j, "dt_ns", p.dt_ns);
  p.sample_every = get_int(j, "sample_every", p.sample_every);
  if (p.sample_every < 1)
    fail("config: out-of-range value for key \"sample_every\": must be >= 1");
}

json cpr_to_json(const CprParams& p) {
  json j = system_to_json(p.system);
  j["pump_level"] = p.pump_level;
  j["stokes_center_ns"] = p.stokes_center_ns;
  j["stokes_fwhm_rabi_ns"] = p.stokes_fwhm_rabi_ns;
  j["probe_level"] = p.probe_level;
  j["t_end_ns"] = p.t_end_ns;
  j["dt_ns"] = p.dt_ns;
  j["sample_every"] = p.sample_every;
  return j;
}

Scenario custom_from_json(const json& j) {
  require_object(j, "custom");
  reject_unknown_keys(j,
                      {"label", "system", "pump", "stokes", "probe", "grid",
                       "initial_populations", "frozen_theta_rad"},
                      "custom");
  Scenario s;
  s.label = get_string(j, "label", "custom");
  if (j.contains("system")) s.system = system_from_json(j.at("system"), LambdaSystem{}, "custom.system");
  if (!j.contains("grid")) fail("config: custom scenario needs key \"grid\"");
  s.grid = grid_from_json(j.at("grid"), TimeGrid{}, "custom.grid");
  if (j.contains("pump")) s.pump = envelope_from_json(j.at("pump"), "custom.pump");
  if (j.contains("stokes")) s.stokes = envelope_from_json(j.at("stokes"), "custom.stokes");
  if (j.contains("probe")) s.probe = envelope_from_json(j.at("probe"), "custom.probe");
  if (j.contains("initial_populations")) {
    const json& pops = j.at("initial_populations");
    if (!pops.is_array() || pops.size() != 3)
      fail("config: \"initial_populations\" must be an array of 3 numbers");
    for (int i = 0; i < 3; ++i) {
      if (!pops[i].is_number()) fail("config: \"initial_populations\" must be numbers");
      s.initial_populations[i] = pops[i].get<double>();
    }
  }
  if (j.contains("frozen_theta_rad") && !j.at("frozen_theta_rad").is_null())
    s.frozen_theta_rad = get_number(j, "frozen_theta_rad", 0.0);
  s.validate();
  return s;
}

json custom_to_json(const Scenario& s) {
  json j{{"label", s.label},
         {"system", system_to_json(s.system)},
         {"pump", envelope_to_json(s.pump)},
         {"stokes", envelope_to_json(s.stokes)},
         {"probe", envelope_to_json(s.probe)},
         {"grid", grid_to_json(s.grid)},
         {"initial_populations",
          json::array({s.initial_populations[0], s.initial_populations[1],
                       s.initial_populations[2]})}};
  if (s.frozen_theta_rad)
    j["frozen_theta_rad"] = *s.frozen_theta_rad;
  else
    j["frozen_theta_rad"] = nullptr;
  return j;
}

}  // namespace

std::vector<double> DelayScanSpec::delays() const {
  if (!(step_ns > 0.0)) fail("config: \"delay_scan.step_ns\" must be > 0");
  if (!(to_ns >= from_ns)) fail("config: \"delay_scan\" needs to_ns >= from_ns");
  const auto count = static_cast<std::size_t>(std::floor((to_ns - from_ns) / step_ns + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = from_ns + static_cast<double>(i) * step_ns;
  return out;
}

RunConfig parse_config(const std::string& text) {
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) {
      blank = false;
      break;
    }

  json j;
  if (blank) {
    j = json::object();
  } else {
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      fail(std::string("config parse error: ") + e.what());
    }
  }
  require_object(j, "config");
  reject_unknown_keys(j,
                      {"scenario", "out_format", "emit_raw_rho", "emit_detector_trace", "seed",
                       "overrides", "stokes_peaks", "delay_scan", "fit_window_ns", "custom",
                       "medium", "field_per_rabi", "detector_window_ns"},
                      "config");

  RunConfig config;
  const std::string kind = get_string(j, "scenario", "fstirap");
  if (kind == "fstirap")
    config.scenario = RunConfig::ScenarioKind::fstirap;
  else if (kind == "cpr")
    config.scenario = RunConfig::ScenarioKind::cpr;
  else if (kind == "custom")
    config.scenario = RunConfig::ScenarioKind::custom;
  else
    fail("config: out-of-range value for key \"scenario\": expected fstirap|cpr|custom");

  const std::string fmt = get_string(j, "out_format", "csv");
  if (fmt == "csv")
    config.out_format = RunConfig::OutputFormat::csv;
  else if (fmt == "json")
    config.out_format = RunConfig::OutputFormat::json;
  else
    fail("config: out-of-range value for key \"out_format\": expected csv|json");

  config.emit_raw_rho = get_bool(j, "emit_raw_rho", config.emit_raw_rho);
  config.emit_detector_trace = get_bool(j, "emit_detector_trace", config.emit_detector_trace);
  if (j.contains("seed")) {
    const json& v = j.at("seed");
    if (!v.is_number_unsigned()) fail("config: key \"seed\" must be a non-negative integer");
    config.seed = v.get<std::uint64_t>();
  }

  if (j.contains("overrides")) {
    const json& o = j.at("overrides");
    require_object(o, "overrides");
    if (config.scenario == RunConfig::ScenarioKind::fstirap)
      apply_fstirap_overrides(o, config.fstirap);
    else if (config.scenario == RunConfig::ScenarioKind::cpr)
      apply_cpr_overrides(o, config.cpr);
    else if (!o.empty())
      fail("config: \"overrides\" do not apply to custom scenarios");
  }

  if (j.contains("stokes_peaks")) {
    const json& peaks = j.at("stokes_peaks");
    if (!peaks.is_array() || peaks.empty())
      fail("config: key \"stokes_peaks\" must be a non-empty array");
    config.stokes_peaks.clear();
    for (const auto& v : peaks) {
      if (!v.is_number()) fail("config: key \"stokes_peaks\" must hold numbers");
      const double x = v.get<double>();
      if (!(x > 0.0))
        fail("config: out-of-range value for key \"stokes_peaks\": peaks must be > 0");
      if (!config.stokes_peaks.empty() && !(x > config.stokes_peaks.back()))
        fail("config: out-of-range value for key \"stokes_peaks\": peaks must be strictly "
             "increasing");
      config.stokes_peaks.push_back(x);
    }
  }

  if (j.contains("delay_scan") && !j.at("delay_scan").is_null()) {
    const json& d = j.at("delay_scan");
    require_object(d, "delay_scan");
    reject_unknown_keys(d, {"from_ns", "to_ns", "step_ns"}, "delay_scan");
    DelayScanSpec spec;
    spec.from_ns = get_number(d, "from_ns", 0.0);
    spec.to_ns = get_number(d, "to_ns", 0.0);
    spec.step_ns = get_positive(d, "step_ns", 200.0);
    if (!(spec.to_ns >= spec.from_ns))
      fail("config: out-of-range value for key \"delay_scan\": to_ns must be >= from_ns");
    config.delay_scan = spec;
  }

  if (j.contains("fit_window_ns") && !j.at("fit_window_ns").is_null()) {
    const json& w = j.at("fit_window_ns");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number())
      fail("config: key \"fit_window_ns\" must be an array of 2 numbers");
    std::array<double, 2> window{w[0].get<double>(), w[1].get<double>()};
    if (!(window[1] > window[0]))
      fail("config: out-of-range value for key \"fit_window_ns\": end must exceed start");
    config.fit_window_ns = window;
  }

  if (config.scenario == RunConfig::ScenarioKind::custom) {
    if (!j.contains("custom") || j.at("custom").is_null())
      fail("config: scenario \"custom\" needs key \"custom\"");
    config.custom = custom_from_json(j.at("custom"));
  } else if (j.contains("custom") && !j.at("custom").is_null()) {
    fail("config: key \"custom\" requires scenario \"custom\"");
  }

  if (j.contains("medium")) config.medium = medium_from_json(j.at("medium"), "medium");
  config.field_per_rabi = get_positive(j, "field_per_rabi", config.field_per_rabi);
  config.detector_window_ns = get_positive(j, "detector_window_ns", config.detector_window_ns);
  return config;
}

std::string serialize_config(const RunConfig& config) {
  json j;
  switch (config.scenario) {
    case RunConfig::ScenarioKind::fstirap: j["scenario"] = "fstirap"; break;
    case RunConfig::ScenarioKind::cpr: j["scenario"] = "cpr"; break;
    case RunConfig::ScenarioKind::custom: j["scenario"] = "custom"; break;
  }
  j["out_format"] = config.out_format == RunConfig::OutputFormat::csv ? "csv" : "json";
  j["emit_raw_rho"] = config.emit_raw_rho;
  j["emit_detector_trace"] = config.emit_detector_trace;
  j["seed"] = config.seed;
  if (config.scenario == RunConfig::ScenarioKind::fstirap)
    j["overrides"] = fstirap_to_json(config.fstirap);
  else if (config.scenario == RunConfig::ScenarioKind::cpr)
    j["overrides"] = cpr_to_json(config.cpr);
  j["stokes_peaks"] = config.stokes_peaks;
  if (config.delay_scan)
    j["delay_scan"] = json{{"from_ns", config.delay_scan->from_ns},
                           {"to_ns", config.delay_scan->to_ns},
                           {"step_ns", config.delay_scan->step_ns}};
  else
    j["delay_scan"] = nullptr;
  if (config.fit_window_ns)
    j["fit_window_ns"] = json::array({(*config.fit_window_ns)[0], (*config.fit_window_ns)[1]});
  else
    j["fit_window_ns"] = nullptr;
  if (config.custom) j["custom"] = custom_to_json(*config.custom);
  j["medium"] = medium_to_json(config.medium);
  j["field_per_rabi"] = config.field_per_rabi;
  j["detector_window_ns"] = config.detector_window_ns;
  return j.dump(2) + "\n";
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("config: cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace lambdasim
