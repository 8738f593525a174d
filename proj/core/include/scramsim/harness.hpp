// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "scramsim/config.hpp"
#include "scramsim/verifier.hpp"

namespace scramsim {

/// One physical sensor instance.
struct Device {
  double v_os = 0.0;          // as manufactured (enrolled at the ECU)
  double v_os_drifted = 0.0;  // under the configured drift
  double sec_enrolled = 0.0;  // shared secret known to the ECU
  double sec_sensor = 0.0;    // secret produced in the package right now
};

/// Offset from cfg.device.v_os, or drawn from substream (seed, kOffset, 0).
Device ResolveDevice(const ScenarioConfig& cfg);

struct RunSummary {
  std::uint64_t seed = 0;
  std::size_t n_samples = 0;
  Device device;
  double a_scale = 0.0;
  double b_offset = 0.0;
  double lsb = 0.0;
  double v_th_detect = 0.0;
  bool threshold_calibrated = false;
  std::optional<Detection> first_detection;
  std::optional<double> injected_amplitude_at_detection;
  std::size_t detections = 0;
  double max_diff = 0.0;
  SaturationCounter saturation_tx;
  SaturationCounter saturation_local;
  std::size_t crosschecked_samples = 0;
};

struct RunReport {
  ScenarioConfig config;
  RunSummary summary;
  std::optional<CalibrationReport> calibration;
  std::vector<double> time;
  std::vector<double> sens_true;
  std::vector<double> sens_line;
  std::vector<double> scram_tx;
  std::vector<double> scram_local;
  std::vector<double> diff;
  std::vector<std::uint8_t> detected;
};

/// Sensor package and ECU wired as in the reference setup:
///   scram_tx    = scramble(sec_sensor, sens + noise)
///   sens_line   = inject(attack, sens)
///   scram_local = scramble(sec_enrolled, sens_line)
/// Noise comes from substream (seed, kNoise, 0). Without a configured
/// threshold RunCalibration runs first on the same seed. About 1% of the
/// samples are recomputed through the scalar scrambler and must match the
/// batch path exactly; a mismatch throws Error.
RunReport RunScenario(const ScenarioConfig& cfg);

/// Characterizes the configured noise on the calibration devices (or the
/// configured device if calibration.secret_offsets is empty). Throws
/// ConfigError if cfg.attack is active.
CalibrationReport RunCalibration(const ScenarioConfig& cfg);

/// Secrets of the calibration devices, in calibration order.
std::vector<double> CalibrationSecrets(const ScenarioConfig& cfg);

/// Copy of cfg with verifier.v_th_detect set from the report.
ScenarioConfig WithThreshold(const ScenarioConfig& cfg,
                             const CalibrationReport& report);

/// Attack used for population studies: cfg.attack when it is a ramp,
/// otherwise 1 V/s from t = 0.
AttackSpec ReferenceRamp(const ScenarioConfig& cfg);

struct MonteCarloDevice {
  std::size_t id = 0;
  std::uint64_t seed = 0;
  double v_os = 0.0;
  double sec = 0.0;
  double v_th_detect = 0.0;
  std::optional<double> detection_amplitude;
  std::optional<double> detection_time;
};

template <typename T>
struct Stats {
  T min{};
  T max{};
  double mean = 0.0;
};

struct MonteCarloReport {
  std::uint64_t seed = 0;
  AttackSpec attack;
  std::vector<MonteCarloDevice> devices;
  Stats<double> v_os;
  Stats<double> sec;
  Stats<double> v_th_detect;
  /// Over detected devices only; zeroed when none were detected.
  Stats<double> detection_amplitude;
  std::size_t undetected = 0;
  double min_pairwise_sec_distance = 0.0;
  bool secret_collision = false;
};

/// Device i uses master seed DeriveSeed(cfg.seed, kDevice, i): its offset,
/// its own calibration (on itself only) and the reference ramp attack all
/// draw from that seed. Rows are folded in index order.
MonteCarloReport RunMonteCarlo(const ScenarioConfig& cfg,
                               std::size_t n_devices);

/// Recomputes the population statistics from the per-device rows.
void Aggregate(MonteCarloReport& report);

}  // namespace scramsim
