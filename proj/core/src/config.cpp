// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "scramsim/error.hpp"

namespace scramsim {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Walks one JSON object, remembering which keys were consumed so that
// leftovers can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path)
      : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) {
      throw ConfigError(path_.empty() ? "<root>" : path_,
                        "expected a JSON object");
    }
  }

  bool Has(const std::string& key) const { return j_.contains(key); }

  const json* Take(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  ObjectReader Child(const std::string& key) {
    const json* v = Take(key);
    static const json kEmpty = json::object();
    return ObjectReader(v ? *v : kEmpty, Join(path_, key));
  }

  void Read(const std::string& key, double& out) {
    if (const json* v = Take(key)) out = Number(*v, key);
  }

  void Read(const std::string& key, std::optional<double>& out) {
    if (const json* v = Take(key)) {
      if (v->is_null()) {
        out.reset();
      } else {
        out = Number(*v, key);
      }
    }
  }

  void Read(const std::string& key, int& out) {
    if (const json* v = Take(key)) {
      if (!v->is_number_integer()) Fail(key, "expected an integer");
      out = v->get<int>();
    }
  }

  void Read(const std::string& key, std::uint64_t& out) {
    if (const json* v = Take(key)) {
      if (!v->is_number_unsigned()) Fail(key, "expected an unsigned 64-bit integer");
      out = v->get<std::uint64_t>();
    }
  }

  void Read(const std::string& key, std::vector<double>& out) {
    if (const json* v = Take(key)) {
      if (!v->is_array()) Fail(key, "expected an array of numbers");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        out.push_back(Number((*v)[i], key + "[" + std::to_string(i) + "]"));
      }
    }
  }

  template <typename Enum, typename Parse>
  void ReadEnum(const std::string& key, Enum& out, Parse parse) {
    if (const json* v = Take(key)) {
      if (!v->is_string()) Fail(key, "expected a string");
      out = parse(v->get<std::string>());
    }
  }

  void Finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) Fail(key, "unknown key");
    }
  }

  [[noreturn]] void Fail(const std::string& key, const std::string& what) const {
    throw ConfigError(Join(path_, key), what);
  }

 private:
  double Number(const json& v, const std::string& key) const {
    if (!v.is_number()) Fail(key, "expected a number");
    return v.get<double>();
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void ReadTranslator(ObjectReader parent, LevelTranslator& t) {
  parent.Read("in_min", t.in_min);
  parent.Read("in_max", t.in_max);
  parent.Read("dvbe_max", t.dvbe_max);
  parent.Finish();
}

ordered_json TranslatorJson(const LevelTranslator& t) {
  ordered_json j;
  j["in_min"] = t.in_min;
  j["in_max"] = t.in_max;
  j["dvbe_max"] = t.dvbe_max;
  return j;
}

template <typename T>
ordered_json Optional(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text,
                                               std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void RequireFinite(double v, const char* field) {
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
}

}  // namespace

std::string_view ToString(StimulusKind kind) {
  return kind == StimulusKind::kSine ? "sine" : "dc";
}

StimulusKind StimulusKindFromString(std::string_view name) {
  if (name == "sine") return StimulusKind::kSine;
  if (name == "dc") return StimulusKind::kDc;
  throw ConfigError("stimulus.kind",
                    "unknown stimulus '" + std::string(name) + "' (sine|dc)");
}

Waveform StimulusSpec::Generate(const TimeGrid& grid) const {
  return kind == StimulusKind::kSine ? SineSensor(grid, freq_hz, v_min, v_max)
                                     : DcSensor(grid, level);
}

void ScenarioConfig::Validate() const {
  const TimeGrid run_grid = grid.ToGrid();

  if (stimulus.kind == StimulusKind::kSine) {
    RequireFinite(stimulus.v_min, "stimulus.v_min");
    RequireFinite(stimulus.v_max, "stimulus.v_max");
    if (!(stimulus.v_min < stimulus.v_max)) {
      throw ConfigError("stimulus.v_min", "sensor range is empty or inverted");
    }
    if (!(stimulus.freq_hz > 0.0) || !std::isfinite(stimulus.freq_hz)) {
      throw ConfigError("stimulus.freq_hz", "must be positive");
    }
    if (run_grid.sample_rate() < 10.0 * stimulus.freq_hz) {
      throw ConfigError("grid.sample_rate_hz",
                        "undersampled stimulus: need >= 10 samples per period");
    }
  } else {
    RequireFinite(stimulus.level, "stimulus.level");
  }

  if (!(device.offset.v_os_max >= 0.0) ||
      !std::isfinite(device.offset.v_os_max)) {
    throw ConfigError("device.offset.v_os_max", "must be finite and >= 0");
  }
  if (device.v_os) RequireFinite(*device.v_os, "device.v_os");
  if (!(device.amplifier.gain > 0.0) || !std::isfinite(device.amplifier.gain)) {
    throw ConfigError("device.amplifier.gain", "must be positive");
  }
  if (!(device.amplifier.clamp > 0.0) ||
      !std::isfinite(device.amplifier.clamp)) {
    throw ConfigError("device.amplifier.clamp", "must be positive");
  }
  RequireFinite(device.drift.temp_coeff, "device.drift.temp_coeff");
  RequireFinite(device.drift.delta_temp, "device.drift.delta_temp");

  [[maybe_unused]] const Scrambler checked(scrambler);

  if (!(noise.amplitude >= 0.0) || !std::isfinite(noise.amplitude)) {
    throw ConfigError("noise.amplitude", "must be finite and >= 0");
  }

  verifier.adc.Validate();
  if (verifier.v_th_detect &&
      (!(*verifier.v_th_detect >= 0.0) || !std::isfinite(*verifier.v_th_detect))) {
    throw ConfigError("verifier.v_th_detect", "must be finite and >= 0");
  }
  if (verifier.debounce < 1) {
    throw ConfigError("verifier.debounce", "must be >= 1");
  }

  if (calibration.n_trials < 1) {
    throw ConfigError("calibration.n_trials", "must be >= 1");
  }
  if (!(calibration.trial_duration_s > 0.0)) {
    throw ConfigError("calibration.trial_duration_s", "must be positive");
  }
  try {
    TimeGrid(grid.sample_rate_hz, calibration.trial_duration_s);
  } catch (const ConfigError& e) {
    throw ConfigError("calibration.trial_duration_s", e.what());
  }
  if (!(calibration.safety_factor >= 1.0) ||
      !std::isfinite(calibration.safety_factor)) {
    throw ConfigError("calibration.safety_factor", "must be >= 1");
  }
  for (std::size_t i = 0; i < calibration.secret_offsets.size(); ++i) {
    if (!std::isfinite(calibration.secret_offsets[i])) {
      throw ConfigError(
          "calibration.secret_offsets[" + std::to_string(i) + "]",
          "must be finite");
    }
  }

  attack.Validate();
}

ScenarioConfig ParseConfig(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = LineColumn(json_text, e.byte);
    throw ParseError(line, col, e.what());
  }

  ScenarioConfig cfg;
  ObjectReader r(root, "");

  if (const json* prng = r.Take("prng")) {
    if (!prng->is_string() || prng->get<std::string>() != kPrngName) {
      r.Fail("prng", "unsupported generator, expected \"" +
                         std::string(kPrngName) + "\"");
    }
  }
  if (!r.Has("seed")) throw ConfigError("seed", "required field is missing");
  r.Read("seed", cfg.seed);

  {
    auto g = r.Child("grid");
    g.Read("sample_rate_hz", cfg.grid.sample_rate_hz);
    g.Read("duration_s", cfg.grid.duration_s);
    g.Finish();
  }
  {
    auto s = r.Child("stimulus");
    s.ReadEnum("kind", cfg.stimulus.kind, StimulusKindFromString);
    s.Read("freq_hz", cfg.stimulus.freq_hz);
    s.Read("v_min", cfg.stimulus.v_min);
    s.Read("v_max", cfg.stimulus.v_max);
    s.Read("level", cfg.stimulus.level);
    s.Finish();
  }
  {
    auto d = r.Child("device");
    {
      auto o = d.Child("offset");
      o.ReadEnum("kind", cfg.device.offset.kind, OffsetKindFromString);
      o.Read("v_os_max", cfg.device.offset.v_os_max);
      o.Finish();
    }
    d.Read("v_os", cfg.device.v_os);
    {
      auto a = d.Child("amplifier");
      a.Read("gain", cfg.device.amplifier.gain);
      a.Read("clamp", cfg.device.amplifier.clamp);
      a.Finish();
    }
    {
      auto dr = d.Child("drift");
      dr.Read("temp_coeff", cfg.device.drift.temp_coeff);
      dr.Read("delta_temp", cfg.device.drift.delta_temp);
      dr.Finish();
    }
    d.Finish();
  }
  {
    auto s = r.Child("scrambler");
    ReadTranslator(s.Child("trans_sec"), cfg.scrambler.trans_sec);
    ReadTranslator(s.Child("trans_sens"), cfg.scrambler.trans_sens);
    s.Read("v_be0", cfg.scrambler.v_be0);
    s.Read("v_therm", cfg.scrambler.v_therm);
    s.Read("ideality", cfg.scrambler.ideality);
    s.Read("out_min", cfg.scrambler.out_min);
    s.Read("out_max", cfg.scrambler.out_max);
    s.Finish();
  }
  {
    auto n = r.Child("noise");
    n.ReadEnum("kind", cfg.noise.kind, NoiseKindFromString);
    n.Read("amplitude", cfg.noise.amplitude);
    n.Finish();
  }
  {
    auto v = r.Child("verifier");
    {
      auto a = v.Child("adc");
      a.Read("bits", cfg.verifier.adc.bits);
      a.Read("v_ref", cfg.verifier.adc.v_ref);
      a.Finish();
    }
    v.Read("v_th_detect", cfg.verifier.v_th_detect);
    v.Read("debounce", cfg.verifier.debounce);
    v.Finish();
  }
  {
    auto c = r.Child("calibration");
    std::uint64_t n_trials = cfg.calibration.n_trials;
    c.Read("n_trials", n_trials);
    cfg.calibration.n_trials = static_cast<std::size_t>(n_trials);
    c.Read("trial_duration_s", cfg.calibration.trial_duration_s);
    c.Read("safety_factor", cfg.calibration.safety_factor);
    c.Read("secret_offsets", cfg.calibration.secret_offsets);
    c.Finish();
  }
  {
    auto a = r.Child("attack");
    a.ReadEnum("kind", cfg.attack.kind, AttackKindFromString);
    a.Read("start_s", cfg.attack.start_s);
    a.Read("param", cfg.attack.param);
    a.Read("staircase_period_s", cfg.attack.staircase_period_s);
    a.Finish();
  }
  r.Finish();

  cfg.Validate();
  return cfg;
}

ScenarioConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

std::string ConfigToJson(const ScenarioConfig& cfg) {
  ordered_json j;
  j["prng"] = kPrngName;
  j["seed"] = cfg.seed;
  j["grid"] = {{"sample_rate_hz", cfg.grid.sample_rate_hz},
               {"duration_s", cfg.grid.duration_s}};
  j["stimulus"] = {{"kind", ToString(cfg.stimulus.kind)},
                   {"freq_hz", cfg.stimulus.freq_hz},
                   {"v_min", cfg.stimulus.v_min},
                   {"v_max", cfg.stimulus.v_max},
                   {"level", cfg.stimulus.level}};

  ordered_json device;
  device["offset"] = {{"kind", ToString(cfg.device.offset.kind)},
                      {"v_os_max", cfg.device.offset.v_os_max}};
  device["v_os"] = Optional(cfg.device.v_os);
  device["amplifier"] = {{"gain", cfg.device.amplifier.gain},
                         {"clamp", cfg.device.amplifier.clamp}};
  device["drift"] = {{"temp_coeff", cfg.device.drift.temp_coeff},
                     {"delta_temp", cfg.device.drift.delta_temp}};
  j["device"] = device;

  ordered_json scr;
  scr["trans_sec"] = TranslatorJson(cfg.scrambler.trans_sec);
  scr["trans_sens"] = TranslatorJson(cfg.scrambler.trans_sens);
  scr["v_be0"] = cfg.scrambler.v_be0;
  scr["v_therm"] = cfg.scrambler.v_therm;
  scr["ideality"] = cfg.scrambler.ideality;
  scr["out_min"] = cfg.scrambler.out_min;
  scr["out_max"] = cfg.scrambler.out_max;
  j["scrambler"] = scr;

  j["noise"] = {{"kind", ToString(cfg.noise.kind)},
                {"amplitude", cfg.noise.amplitude}};

  ordered_json ver;
  ver["adc"] = {{"bits", cfg.verifier.adc.bits},
                {"v_ref", cfg.verifier.adc.v_ref}};
  ver["v_th_detect"] = Optional(cfg.verifier.v_th_detect);
  ver["debounce"] = cfg.verifier.debounce;
  j["verifier"] = ver;

  ordered_json cal;
  cal["n_trials"] = cfg.calibration.n_trials;
  cal["trial_duration_s"] = cfg.calibration.trial_duration_s;
  cal["safety_factor"] = cfg.calibration.safety_factor;
  cal["secret_offsets"] = cfg.calibration.secret_offsets;
  j["calibration"] = cal;

  j["attack"] = {{"kind", ToString(cfg.attack.kind)},
                 {"start_s", cfg.attack.start_s},
                 {"param", cfg.attack.param},
                 {"staircase_period_s", cfg.attack.staircase_period_s}};
  return j.dump(2) + "\n";
}

void SaveConfig(const ScenarioConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write config file " + path.string());
  out << ConfigToJson(cfg);
}

}  // namespace scramsim
