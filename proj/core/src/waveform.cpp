// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/waveform.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "scramsim/error.hpp"

namespace scramsim {

TimeGrid::TimeGrid(double sample_rate_hz, double duration_s)
    : sample_rate_(sample_rate_hz), duration_(duration_s), n_samples_(0) {
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz)) {
    throw ConfigError("grid.sample_rate_hz", "must be positive and finite");
  }
  if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
    throw ConfigError("grid.duration_s", "must be positive and finite");
  }
  const double n = std::round(duration_s * sample_rate_hz);
  if (n < 1.0) {
    throw ConfigError("grid.duration_s", "grid holds no samples");
  }
  n_samples_ = static_cast<std::size_t>(n);
}

Waveform::Waveform(TimeGrid grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw Error("waveform length " + std::to_string(samples_.size()) +
                " does not match grid size " + std::to_string(grid_.size()));
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) throw Error("waveform sample is not finite");
  }
}

Waveform Waveform::Truncated(std::size_t n) const {
  if (n == 0 || n > samples_.size()) {
    throw Error("truncation length out of range");
  }
  TimeGrid grid(grid_.sample_rate(),
                static_cast<double>(n) / grid_.sample_rate());
  return Waveform(grid, {samples_.begin(), samples_.begin() + n});
}

std::string_view ToString(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kNone:
      return "none";
    case NoiseKind::kUniform:
      return "uniform";
    case NoiseKind::kGaussian:
      return "gaussian";
  }
  return "?";
}

NoiseKind NoiseKindFromString(std::string_view name) {
  if (name == "none") return NoiseKind::kNone;
  if (name == "uniform") return NoiseKind::kUniform;
  if (name == "gaussian") return NoiseKind::kGaussian;
  throw ConfigError("noise.kind", "unknown noise kind '" + std::string(name) +
                                      "' (none|uniform|gaussian)");
}

Waveform SineSensor(const TimeGrid& grid, double freq_hz, double v_min,
                    double v_max) {
  if (!(freq_hz > 0.0)) throw ConfigError("stimulus.freq_hz", "must be > 0");
  if (!(v_min < v_max)) {
    throw ConfigError("stimulus.v_min", "v_min must be below v_max");
  }
  if (grid.sample_rate() < 10.0 * freq_hz) {
    throw ConfigError("grid.sample_rate_hz",
                      "undersampled stimulus: need at least 10 samples per "
                      "period");
  }
  const double mid = 0.5 * (v_min + v_max);
  const double amp = 0.5 * (v_max - v_min);
  const double w = 2.0 * std::numbers::pi * freq_hz;
  std::vector<double> s(grid.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    // Rounding can push mid + amp past v_max by an ulp.
    s[k] = std::clamp(mid + amp * std::sin(w * grid.time_at(k)), v_min, v_max);
  }
  return Waveform(grid, std::move(s));
}

Waveform DcSensor(const TimeGrid& grid, double level) {
  if (!std::isfinite(level)) throw ConfigError("stimulus.level", "not finite");
  return Waveform(grid, std::vector<double>(grid.size(), level));
}

Waveform GenerateNoise(const TimeGrid& grid, const NoiseSpec& spec,
                       RngStream& stream) {
  if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude)) {
    throw ConfigError("noise.amplitude", "must be finite and >= 0");
  }
  std::vector<double> s(grid.size(), 0.0);
  switch (spec.kind) {
    case NoiseKind::kNone:
      break;
    case NoiseKind::kUniform:
      for (double& v : s) v = spec.amplitude * stream.NextSymmetric();
      break;
    case NoiseKind::kGaussian:
      for (double& v : s) v = spec.amplitude * stream.NextGaussian();
      break;
  }
  return Waveform(grid, std::move(s));
}

Waveform Add(const Waveform& lhs, const Waveform& rhs) {
  if (!(lhs.grid() == rhs.grid())) {
    throw Error("cannot add waveforms on different grids");
  }
  std::vector<double> s(lhs.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = lhs[k] + rhs[k];
  return Waveform(lhs.grid(), std::move(s));
}

std::string FormatDouble(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void WriteCsv(std::ostream& out, const Waveform& w) {
  out << "time_s,volts\n";
  for (std::size_t k = 0; k < w.size(); ++k) {
    out << FormatDouble(w.grid().time_at(k)) << ',' << FormatDouble(w[k])
        << '\n';
  }
}

}  // namespace scramsim
