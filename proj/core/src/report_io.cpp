// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/report_io.hpp"

#include <ostream>

#include "json.hpp"

namespace scramsim {
namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
ordered_json Optional(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json SaturationJson(const SaturationCounter& c) {
  return {{"sec", c.sec}, {"sens", c.sens}};
}

ordered_json StatsJson(const Stats<double>& s) {
  return {{"min", s.min}, {"max", s.max}, {"mean", s.mean}};
}

ordered_json CalibrationObject(const CalibrationReport& r) {
  ordered_json j;
  j["noise_kind"] = ToString(r.noise.kind);
  j["noise_peak"] = r.noise.amplitude;
  j["per_secret_max_diff"] = r.per_secret_max_diff;
  j["v_th_detect"] = r.v_th_detect;
  j["argmax_secret"] = r.argmax_secret;
  j["seed"] = r.seed;
  j["prng"] = kPrngName;
  j["secrets"] = r.secrets;
  j["argmax_index"] = r.argmax_index;
  j["observed_max_diff"] = r.observed_max;
  j["safety_factor"] = r.safety_factor;
  j["n_trials"] = r.n_trials;
  j["saturation_tx"] = SaturationJson(r.saturation);
  return j;
}

std::string Cell(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

}  // namespace

void WriteTraceCsv(std::ostream& out, const RunReport& r) {
  out << "time_s,sens_true,sens_line,scram_tx,scram_local,diff,detected\n";
  for (std::size_t k = 0; k < r.time.size(); ++k) {
    out << FormatDouble(r.time[k]) << ',' << FormatDouble(r.sens_true[k]) << ','
        << FormatDouble(r.sens_line[k]) << ',' << FormatDouble(r.scram_tx[k])
        << ',' << FormatDouble(r.scram_local[k]) << ','
        << FormatDouble(r.diff[k]) << ',' << static_cast<int>(r.detected[k])
        << '\n';
  }
}

std::string SummaryToJson(const RunReport& r) {
  const RunSummary& s = r.summary;
  ordered_json j;
  j["seed"] = s.seed;
  j["prng"] = kPrngName;
  j["n_samples"] = s.n_samples;
  j["device"] = {{"v_os", s.device.v_os},
                 {"v_os_drifted", s.device.v_os_drifted},
                 {"sec_enrolled", s.device.sec_enrolled},
                 {"sec_sensor", s.device.sec_sensor}};
  j["a_scale"] = s.a_scale;
  j["b_offset"] = s.b_offset;
  j["lsb"] = s.lsb;
  j["v_th_detect"] = s.v_th_detect;
  j["threshold_calibrated"] = s.threshold_calibrated;
  j["detected"] = s.first_detection.has_value();
  if (s.first_detection) {
    j["first_detection"] = {{"sample", s.first_detection->sample},
                            {"time_s", s.first_detection->time_s}};
  } else {
    j["first_detection"] = nullptr;
  }
  j["injected_amplitude_at_detection"] =
      Optional(s.injected_amplitude_at_detection);
  j["detections"] = s.detections;
  j["max_diff"] = s.max_diff;
  j["saturation_tx"] = SaturationJson(s.saturation_tx);
  j["saturation_local"] = SaturationJson(s.saturation_local);
  j["crosschecked_samples"] = s.crosschecked_samples;
  j["calibration"] =
      r.calibration ? CalibrationObject(*r.calibration) : ordered_json(nullptr);
  j["config"] = ordered_json::parse(ConfigToJson(r.config));
  return j.dump(2) + "\n";
}

std::string CalibrationToJson(const CalibrationReport& report) {
  return CalibrationObject(report).dump(2) + "\n";
}

void WritePopulationCsv(std::ostream& out, const MonteCarloReport& report) {
  out << "device_id,v_os_volts,sec_volts\n";
  for (const auto& d : report.devices) {
    out << d.id << ',' << FormatDouble(d.v_os) << ',' << FormatDouble(d.sec)
        << '\n';
  }
}

void WriteMonteCarloCsv(std::ostream& out, const MonteCarloReport& report) {
  out << "device_id,seed,v_os_volts,sec_volts,v_th_detect_volts,"
         "detection_time_s,detection_amplitude_volts\n";
  for (const auto& d : report.devices) {
    out << d.id << ',' << d.seed << ',' << FormatDouble(d.v_os) << ','
        << FormatDouble(d.sec) << ',' << FormatDouble(d.v_th_detect) << ','
        << Cell(d.detection_time) << ',' << Cell(d.detection_amplitude) << '\n';
  }
}

std::string MonteCarloToJson(const MonteCarloReport& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["prng"] = kPrngName;
  j["n_devices"] = r.devices.size();
  j["attack"] = {{"kind", ToString(r.attack.kind)},
                 {"start_s", r.attack.start_s},
                 {"param", r.attack.param},
                 {"staircase_period_s", r.attack.staircase_period_s}};
  j["v_os"] = StatsJson(r.v_os);
  j["sec"] = StatsJson(r.sec);
  j["v_th_detect"] = StatsJson(r.v_th_detect);
  j["detection_amplitude"] = StatsJson(r.detection_amplitude);
  j["undetected"] = r.undetected;
  j["min_pairwise_sec_distance"] = r.min_pairwise_sec_distance;
  j["secret_collision"] = r.secret_collision;
  return j.dump(2) + "\n";
}

}  // namespace scramsim
