// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scramsim/attacks.hpp"
#include "scramsim/scrambler.hpp"
#include "scramsim/secretgen.hpp"
#include "scramsim/verifier.hpp"
#include "scramsim/waveform.hpp"

namespace scramsim {

struct GridSettings {
  double sample_rate_hz = 100e3;
  double duration_s = 0.1;

  TimeGrid ToGrid() const { return TimeGrid(sample_rate_hz, duration_s); }
  friend bool operator==(const GridSettings&, const GridSettings&) = default;
};

enum class StimulusKind { kSine, kDc };

std::string_view ToString(StimulusKind kind);
StimulusKind StimulusKindFromString(std::string_view name);

struct StimulusSpec {
  StimulusKind kind = StimulusKind::kSine;
  double freq_hz = 1e3;
  double v_min = 0.5;
  double v_max = 4.5;
  double level = 2.5;  // dc only

  Waveform Generate(const TimeGrid& grid) const;
  friend bool operator==(const StimulusSpec&, const StimulusSpec&) = default;
};

struct DeviceSpec {
  OffsetDistribution offset;
  /// Forces the device offset instead of sampling it.
  std::optional<double> v_os;
  SecretAmplifier amplifier;
  DriftSpec drift;

  friend bool operator==(const DeviceSpec&, const DeviceSpec&) = default;
};

struct VerifierSettings {
  AdcConfig adc;
  /// Absent means: calibrate before running.
  std::optional<double> v_th_detect;
  int debounce = 1;

  friend bool operator==(const VerifierSettings&,
                         const VerifierSettings&) = default;
};

struct CalibrationSettings {
  std::size_t n_trials = 10;
  double trial_duration_s = 0.01;
  double safety_factor = 1.0;
  /// Offsets of the characterization devices; empty means "the configured
  /// device only".
  std::vector<double> secret_offsets{-0.007, 0.0, 0.007};

  friend bool operator==(const CalibrationSettings&,
                         const CalibrationSettings&) = default;
};

/// Everything needed to reproduce a run bit-for-bit.
struct ScenarioConfig {
  std::uint64_t seed = 1;
  GridSettings grid;
  StimulusSpec stimulus;
  DeviceSpec device;
  ScramblerSettings scrambler;
  NoiseSpec noise;
  VerifierSettings verifier;
  CalibrationSettings calibration;
  AttackSpec attack;

  /// Throws ConfigError naming the first offending field.
  void Validate() const;

  friend bool operator==(const ScenarioConfig&,
                         const ScenarioConfig&) = default;
};

/// Strict JSON reader: unknown keys, wrong types and a missing "seed" are
/// errors. Omitted sections take their defaults. Throws ParseError for
/// malformed JSON and ConfigError for schema/range violations.
ScenarioConfig ParseConfig(std::string_view json_text);
ScenarioConfig LoadConfig(const std::filesystem::path& path);

/// Full JSON rendering with every field present (round-trips through
/// ParseConfig).
std::string ConfigToJson(const ScenarioConfig& cfg);
void SaveConfig(const ScenarioConfig& cfg, const std::filesystem::path& path);

}  // namespace scramsim
