// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "scramsim/scrambler.hpp"
#include "scramsim/waveform.hpp"

namespace scramsim {

/// ECU converter. LSB = v_ref / 2^bits.
struct AdcConfig {
  int bits = 12;
  double v_ref = 5.0;

  double lsb() const noexcept;
  /// Throws ConfigError("adc.*") unless bits in [8, 16] and v_ref > 0.
  void Validate() const;

  friend bool operator==(const AdcConfig&, const AdcConfig&) = default;
};

/// Mid-tread quantizer: round(clamp(v, 0, v_ref) / LSB) * LSB, ties away
/// from zero.
double Quantize(const AdcConfig& adc, double v) noexcept;

struct VerifierConfig {
  AdcConfig adc;
  double v_th_detect = 0.0;  // detection threshold on |diff|, V
  int debounce = 1;          // consecutive exceedances to flag a sample

  void Validate() const;

  friend bool operator==(const VerifierConfig&,
                         const VerifierConfig&) = default;
};

struct Detection {
  std::size_t sample;
  double time_s;

  friend bool operator==(const Detection&, const Detection&) = default;
};

/// Outcome of comparing a received signature against the ECU's own.
struct Verdict {
  std::vector<double> scram_local;  // unquantized local signature
  std::vector<double> diff;         // |Q(scram_rx) - Q(scram_local)|
  std::vector<std::uint8_t> tampered;
  std::optional<Detection> first_detection;
  std::size_t detections = 0;
  SaturationCounter saturation;  // of the local recomputation
};

/// Flags sample k as tampered when diff > v_th_detect (strict) has held for
/// `debounce` consecutive samples ending at k.
Verdict VerifyStream(const VerifierConfig& cfg, const Scrambler& scrambler,
                     double sec, const Waveform& sens_line,
                     const Waveform& scram_line);

/// Writes `time_s,diff_volts,detected`.
void WriteDiffCsv(std::ostream& out, const TimeGrid& grid,
                  const Verdict& verdict);

/// Characterization of the no-attack loop for a set of secrets.
struct CalibrationReport {
  NoiseSpec noise;
  std::uint64_t seed = 0;
  std::size_t n_trials = 0;
  double safety_factor = 1.0;
  std::vector<double> secrets;
  std::vector<double> per_secret_max_diff;
  double observed_max = 0.0;
  double v_th_detect = 0.0;  // safety_factor * observed_max
  std::size_t argmax_index = 0;
  double argmax_secret = 0.0;
  SaturationCounter saturation;  // transmitter side, all trials
};

/// For every trial i a fresh noise record is drawn from the substream
/// (seed, kTrial, i) and shared by all secrets. The noise is added only to
/// the scrambler's sens input; the ECU sees the clean stimulus. The report
/// holds the largest quantized diff per secret and the scaled maximum.
/// Ties resolve to the lowest secret index.
CalibrationReport CalibrateThreshold(const Scrambler& scrambler,
                                     const AdcConfig& adc,
                                     std::span<const double> secrets,
                                     const Waveform& stimulus,
                                     const NoiseSpec& noise,
                                     std::size_t n_trials,
                                     double safety_factor, std::uint64_t seed);

}  // namespace scramsim
