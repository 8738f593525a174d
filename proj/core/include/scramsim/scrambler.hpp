// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "scramsim/waveform.hpp"

namespace scramsim {

/// Op-amp level shifter feeding one base-emitter junction: maps
/// [in_min, in_max] linearly onto [0, dvbe_max], saturating outside.
struct LevelTranslator {
  double in_min = 0.0;
  double in_max = 1.0;
  double dvbe_max = 0.045;

  /// Volts of delta-V_BE per input volt.
  double gain() const noexcept { return dvbe_max / (in_max - in_min); }

  friend bool operator==(const LevelTranslator&,
                         const LevelTranslator&) = default;
};

struct TranslateResult {
  double dvbe;
  bool saturated;
};

TranslateResult Translate(const LevelTranslator& t, double x) noexcept;

/// Per-input count of samples whose translator clamped.
struct SaturationCounter {
  std::uint64_t sec = 0;
  std::uint64_t sens = 0;

  std::uint64_t total() const noexcept { return sec + sens; }
  SaturationCounter& operator+=(const SaturationCounter& o) noexcept {
    sec += o.sec;
    sens += o.sens;
    return *this;
  }
  friend bool operator==(const SaturationCounter&,
                         const SaturationCounter&) = default;
};

/// Configuration of the exponential signature block.
struct ScramblerSettings {
  LevelTranslator trans_sec{-1.0, 1.0, 0.045};
  LevelTranslator trans_sens{0.5, 4.5, 0.045};
  double v_be0 = 0.55;         // bias of the core, V
  double v_therm = 0.025852;   // kT/q, V
  double ideality = 1.0;       // junction emission coefficient
  double out_min = 0.5;
  double out_max = 4.5;

  friend bool operator==(const ScramblerSettings&,
                         const ScramblerSettings&) = default;
};

/// Thermal voltage kT/q at the given absolute temperature.
double ThermalVoltage(double kelvin) noexcept;

/// Validated scrambler with its derived output mapping.
///
/// The two-transistor core turns the summed translator outputs x into a
/// collector-current ratio exp(x / (n * v_therm)); the saturation current
/// cancels. The output stage maps that ratio affinely so that x = 0 lands on
/// out_min and x = x_max lands on out_max:
///
///   scram = a_scale * exp(x / (n * v_therm)) + b_offset
///   a_scale = (out_max - out_min) / (exp(x_max / (n * v_therm)) - 1)
///   b_offset = out_min - a_scale
class Scrambler {
 public:
  /// Throws ConfigError when the translators are degenerate, v_therm or the
  /// ideality is not positive, out_min >= out_max, or the junction excursion
  /// [v_be0, v_be0 + x_max] leaves the 0.5 V to 0.7 V exponential window.
  explicit Scrambler(const ScramblerSettings& settings);

  const ScramblerSettings& settings() const noexcept { return settings_; }
  double a_scale() const noexcept { return a_scale_; }
  double b_offset() const noexcept { return b_offset_; }
  /// n * v_therm.
  double slope_voltage() const noexcept { return slope_voltage_; }
  /// Total delta-V_BE span of both translators.
  double dvbe_span() const noexcept { return dvbe_span_; }

  /// Signature for one (sec, sens) pair.
  double operator()(double sec, double sens) const noexcept;

  /// Same as operator() but records which translators clamped.
  double Evaluate(double sec, double sens,
                  SaturationCounter& counter) const noexcept;

  /// Output as a function of total delta-V_BE, for callers that already
  /// combined both translators.
  double FromDvbe(double dvbe_total) const noexcept;

  /// Applies the scrambler sample-by-sample with a fixed secret.
  Waveform Apply(double sec, const Waveform& sens,
                 SaturationCounter& counter) const;

 private:
  ScramblerSettings settings_;
  double slope_voltage_;
  double dvbe_span_;
  double a_scale_;
  double b_offset_;
};

struct DcSweepRow {
  double sec;
  double sens;
  double scram;
};

/// Evaluates the scrambler on n_points evenly spaced sens values in
/// [sens_lo, sens_hi] for every secret, ordered by (sec index, sens).
/// Requires n_points >= 2 and sens_lo < sens_hi.
std::vector<DcSweepRow> DcSweep(const Scrambler& scrambler,
                                std::span<const double> sec_values,
                                double sens_lo, double sens_hi,
                                std::size_t n_points);

/// Writes `sec_volts,sens_volts,scram_volts`.
void WriteDcSweepCsv(std::ostream& out, std::span<const DcSweepRow> rows);

}  // namespace scramsim
