// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/harness.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "scramsim/attacks.hpp"
#include "scramsim/error.hpp"

namespace scramsim {
namespace {

// One sample in kCrossCheckStride is recomputed through the scalar path.
constexpr std::uint64_t kCrossCheckStride = 100;

template <typename Range, typename Proj>
Stats<double> Summarize(const Range& rows, Proj proj) {
  Stats<double> s;
  bool first = true;
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& row : rows) {
    const double v = proj(row);
    if (first) {
      s.min = s.max = v;
      first = false;
    }
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    sum += v;
    ++n;
  }
  s.mean = n ? sum / static_cast<double>(n) : 0.0;
  return s;
}

}  // namespace

Device ResolveDevice(const ScenarioConfig& cfg) {
  Device d;
  if (cfg.device.v_os) {
    d.v_os = *cfg.device.v_os;
  } else {
    RngStream stream(cfg.seed, StreamRole::kOffset, 0);
    d.v_os = SampleOffset(cfg.device.offset, stream);
  }
  d.v_os_drifted = cfg.device.drift.temp_coeff * cfg.device.drift.delta_temp == 0.0
                       ? d.v_os
                       : ApplyDrift(d.v_os, cfg.device.drift,
                                    cfg.device.offset.v_os_max);
  d.sec_enrolled = SecretFromOffset(d.v_os, cfg.device.amplifier);
  d.sec_sensor = SecretFromOffset(d.v_os_drifted, cfg.device.amplifier);
  return d;
}

std::vector<double> CalibrationSecrets(const ScenarioConfig& cfg) {
  if (cfg.calibration.secret_offsets.empty()) {
    return {ResolveDevice(cfg).sec_enrolled};
  }
  std::vector<double> secrets;
  secrets.reserve(cfg.calibration.secret_offsets.size());
  for (double v_os : cfg.calibration.secret_offsets) {
    secrets.push_back(SecretFromOffset(v_os, cfg.device.amplifier));
  }
  return secrets;
}

CalibrationReport RunCalibration(const ScenarioConfig& cfg) {
  cfg.Validate();
  if (cfg.attack.kind != AttackKind::kNone) {
    throw ConfigError("attack.kind",
                      "calibration characterizes the attack-free loop; "
                      "set attack.kind to \"none\"");
  }
  const TimeGrid grid(cfg.grid.sample_rate_hz,
                      cfg.calibration.trial_duration_s);
  const Scrambler scrambler(cfg.scrambler);
  const auto secrets = CalibrationSecrets(cfg);
  return CalibrateThreshold(scrambler, cfg.verifier.adc, secrets,
                            cfg.stimulus.Generate(grid), cfg.noise,
                            cfg.calibration.n_trials,
                            cfg.calibration.safety_factor, cfg.seed);
}

ScenarioConfig WithThreshold(const ScenarioConfig& cfg,
                             const CalibrationReport& report) {
  ScenarioConfig out = cfg;
  out.verifier.v_th_detect = report.v_th_detect;
  return out;
}

AttackSpec ReferenceRamp(const ScenarioConfig& cfg) {
  if (cfg.attack.kind == AttackKind::kRamp) return cfg.attack;
  AttackSpec ramp;
  ramp.kind = AttackKind::kRamp;
  ramp.param = 1.0;
  return ramp;
}

RunReport RunScenario(const ScenarioConfig& cfg) {
  cfg.Validate();

  RunReport report;
  report.config = cfg;
  RunSummary& sum = report.summary;

  const TimeGrid grid = cfg.grid.ToGrid();
  const Scrambler scrambler(cfg.scrambler);
  const Waveform sens = cfg.stimulus.Generate(grid);
  sum.seed = cfg.seed;
  sum.n_samples = grid.size();
  sum.device = ResolveDevice(cfg);
  sum.a_scale = scrambler.a_scale();
  sum.b_offset = scrambler.b_offset();
  sum.lsb = cfg.verifier.adc.lsb();

  if (cfg.verifier.v_th_detect) {
    sum.v_th_detect = *cfg.verifier.v_th_detect;
  } else {
    ScenarioConfig quiet = cfg;
    quiet.attack = AttackSpec{};
    report.calibration = RunCalibration(quiet);
    sum.v_th_detect = report.calibration->v_th_detect;
    sum.threshold_calibrated = true;
  }

  RngStream noise_stream(cfg.seed, StreamRole::kNoise, 0);
  const Waveform noise = GenerateNoise(grid, cfg.noise, noise_stream);
  const Waveform scram_in = Add(sens, noise);
  const Waveform scram_tx =
      scrambler.Apply(sum.device.sec_sensor, scram_in, sum.saturation_tx);
  const Waveform sens_line = Inject(cfg.attack, sens);

  const VerifierConfig vcfg{cfg.verifier.adc, sum.v_th_detect,
                            cfg.verifier.debounce};
  Verdict verdict = VerifyStream(vcfg, scrambler, sum.device.sec_enrolled,
                                 sens_line, scram_tx);
  sum.saturation_local = verdict.saturation;
  sum.detections = verdict.detections;
  sum.first_detection = verdict.first_detection;
  if (sum.first_detection) {
    sum.injected_amplitude_at_detection =
        InjectedAmplitude(cfg.attack, sum.first_detection->time_s);
  }
  sum.max_diff = verdict.diff.empty()
                     ? 0.0
                     : *std::max_element(verdict.diff.begin(),
                                         verdict.diff.end());

  RngStream pick(cfg.seed, StreamRole::kNoise, 1);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (pick.NextU64() % kCrossCheckStride != 0) continue;
    const double expect = scrambler(sum.device.sec_sensor, sens[k] + noise[k]);
    if (std::bit_cast<std::uint64_t>(expect) !=
        std::bit_cast<std::uint64_t>(scram_tx[k])) {
      throw Error("pipeline cross-check failed at sample " + std::to_string(k));
    }
    ++sum.crosschecked_samples;
  }

  report.time.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) report.time[k] = grid.time_at(k);
  report.sens_true.assign(sens.samples().begin(), sens.samples().end());
  report.sens_line.assign(sens_line.samples().begin(),
                          sens_line.samples().end());
  report.scram_tx.assign(scram_tx.samples().begin(), scram_tx.samples().end());
  report.scram_local = std::move(verdict.scram_local);
  report.diff = std::move(verdict.diff);
  report.detected = std::move(verdict.tampered);
  return report;
}

void Aggregate(MonteCarloReport& report) {
  const auto& rows = report.devices;
  report.v_os = Summarize(rows, [](const auto& d) { return d.v_os; });
  report.sec = Summarize(rows, [](const auto& d) { return d.sec; });
  report.v_th_detect =
      Summarize(rows, [](const auto& d) { return d.v_th_detect; });

  std::vector<double> amplitudes;
  report.undetected = 0;
  for (const auto& d : rows) {
    if (d.detection_amplitude) {
      amplitudes.push_back(*d.detection_amplitude);
    } else {
      ++report.undetected;
    }
  }
  report.detection_amplitude =
      Summarize(amplitudes, [](double v) { return v; });

  std::vector<double> secs;
  for (const auto& d : rows) secs.push_back(d.sec);
  std::sort(secs.begin(), secs.end());
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < secs.size(); ++i) {
    min_gap = std::min(min_gap, secs[i] - secs[i - 1]);
  }
  report.min_pairwise_sec_distance = secs.size() < 2 ? 0.0 : min_gap;
  report.secret_collision = secs.size() >= 2 && min_gap == 0.0;
}

MonteCarloReport RunMonteCarlo(const ScenarioConfig& cfg,
                               std::size_t n_devices) {
  cfg.Validate();
  if (n_devices < 2) throw ConfigError("n_devices", "must be >= 2");

  MonteCarloReport report;
  report.seed = cfg.seed;
  report.attack = ReferenceRamp(cfg);
  report.devices.reserve(n_devices);

  for (std::size_t i = 0; i < n_devices; ++i) {
    ScenarioConfig dcfg = cfg;
    dcfg.seed = DeriveSeed(cfg.seed, StreamRole::kDevice, i);
    dcfg.attack = AttackSpec{};
    dcfg.calibration.secret_offsets.clear();
    const Device device = ResolveDevice(dcfg);
    const CalibrationReport cal = RunCalibration(dcfg);

    dcfg.attack = report.attack;
    dcfg.verifier.v_th_detect = cal.v_th_detect;
    const RunReport run = RunScenario(dcfg);

    MonteCarloDevice row;
    row.id = i;
    row.seed = dcfg.seed;
    row.v_os = device.v_os;
    row.sec = device.sec_enrolled;
    row.v_th_detect = cal.v_th_detect;
    if (run.summary.first_detection) {
      row.detection_time = run.summary.first_detection->time_s;
      row.detection_amplitude = run.summary.injected_amplitude_at_detection;
    }
    report.devices.push_back(row);
  }
  Aggregate(report);
  return report;
}

}  // namespace scramsim
