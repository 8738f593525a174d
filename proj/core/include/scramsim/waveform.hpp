// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scramsim/rng.hpp"

namespace scramsim {

/// Uniform sampling grid. Sample k sits at exactly k / sample_rate seconds.
class TimeGrid {
 public:
  /// Throws ConfigError unless sample_rate > 0, duration > 0 and the grid
  /// holds at least one sample.
  TimeGrid(double sample_rate_hz, double duration_s);

  double sample_rate() const noexcept { return sample_rate_; }
  double duration() const noexcept { return duration_; }
  std::size_t size() const noexcept { return n_samples_; }
  double time_at(std::size_t k) const noexcept {
    return static_cast<double>(k) / sample_rate_;
  }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  double sample_rate_;
  double duration_;
  std::size_t n_samples_;
};

/// Immutable sampled voltage signal.
class Waveform {
 public:
  /// Throws Error if samples.size() != grid.size() or any sample is not finite.
  Waveform(TimeGrid grid, std::vector<double> samples);

  const TimeGrid& grid() const noexcept { return grid_; }
  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t k) const noexcept { return samples_[k]; }

  /// First n samples on a grid of n / sample_rate seconds.
  Waveform Truncated(std::size_t n) const;

  friend bool operator==(const Waveform&, const Waveform&) = default;

 private:
  TimeGrid grid_;
  std::vector<double> samples_;
};

enum class NoiseKind { kNone, kUniform, kGaussian };

std::string_view ToString(NoiseKind kind);
NoiseKind NoiseKindFromString(std::string_view name);

/// Line noise. `amplitude` is the peak for uniform noise and the standard
/// deviation for gaussian noise.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::kUniform;
  double amplitude = 0.0675;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/// (v_min + v_max)/2 + (v_max - v_min)/2 * sin(2 pi f t). Rejects grids with
/// fewer than 10 samples per period.
Waveform SineSensor(const TimeGrid& grid, double freq_hz, double v_min,
                    double v_max);

Waveform DcSensor(const TimeGrid& grid, double level);

/// Zero-mean noise; uniform draws are peak * NextSymmetric(), gaussian draws
/// are sigma * NextGaussian(), one draw per sample in order.
Waveform GenerateNoise(const TimeGrid& grid, const NoiseSpec& spec,
                       RngStream& stream);

/// Element-wise sum. Grids must match exactly.
Waveform Add(const Waveform& lhs, const Waveform& rhs);

/// Writes `time_s,volts`, one row per sample.
void WriteCsv(std::ostream& out, const Waveform& w);

/// Shortest decimal string that round-trips the double (%.17g fallback).
std::string FormatDouble(double v);

}  // namespace scramsim
