// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/scrambler.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "scramsim/error.hpp"

namespace scramsim {
namespace {

constexpr double kBoltzmann = 1.380649e-23;
constexpr double kElectronCharge = 1.602176634e-19;

// Junction voltages for which I_C(V_BE) is a clean exponential.
constexpr double kExpWindowLo = 0.5;
constexpr double kExpWindowHi = 0.7;

void ValidateTranslator(const LevelTranslator& t, const std::string& path) {
  if (!std::isfinite(t.in_min) || !std::isfinite(t.in_max) ||
      !(t.in_min < t.in_max)) {
    throw ConfigError(path + ".in_min", "must be finite with in_min < in_max");
  }
  if (!(t.dvbe_max > 0.0) || !std::isfinite(t.dvbe_max)) {
    throw ConfigError(path + ".dvbe_max", "must be positive");
  }
}

}  // namespace

TranslateResult Translate(const LevelTranslator& t, double x) noexcept {
  if (x <= t.in_min) return {0.0, x < t.in_min};
  if (x >= t.in_max) return {t.dvbe_max, x > t.in_max};
  return {t.dvbe_max * (x - t.in_min) / (t.in_max - t.in_min), false};
}

double ThermalVoltage(double kelvin) noexcept {
  return kBoltzmann * kelvin / kElectronCharge;
}

Scrambler::Scrambler(const ScramblerSettings& settings) : settings_(settings) {
  ValidateTranslator(settings.trans_sec, "scrambler.trans_sec");
  ValidateTranslator(settings.trans_sens, "scrambler.trans_sens");
  if (!(settings.v_therm > 0.0) || !std::isfinite(settings.v_therm)) {
    throw ConfigError("scrambler.v_therm", "must be positive");
  }
  if (!(settings.ideality > 0.0) || !std::isfinite(settings.ideality)) {
    throw ConfigError("scrambler.ideality", "must be positive");
  }
  if (!std::isfinite(settings.out_min) || !std::isfinite(settings.out_max) ||
      !(settings.out_min < settings.out_max)) {
    throw ConfigError("scrambler.out_min", "must be below out_max");
  }
  dvbe_span_ = settings.trans_sec.dvbe_max + settings.trans_sens.dvbe_max;
  if (!(settings.v_be0 >= kExpWindowLo) ||
      !(settings.v_be0 + dvbe_span_ <= kExpWindowHi + 1e-12)) {
    throw ConfigError("scrambler.v_be0",
                      "junction excursion must stay inside 0.5 V..0.7 V");
  }
  slope_voltage_ = settings.ideality * settings.v_therm;
  a_scale_ = (settings.out_max - settings.out_min) /
             std::expm1(dvbe_span_ / slope_voltage_);
  b_offset_ = settings.out_min - a_scale_;
}

double Scrambler::FromDvbe(double dvbe_total) const noexcept {
  const double v = a_scale_ * std::exp(dvbe_total / slope_voltage_) + b_offset_;
  return std::clamp(v, settings_.out_min, settings_.out_max);
}

double Scrambler::operator()(double sec, double sens) const noexcept {
  return FromDvbe(Translate(settings_.trans_sec, sec).dvbe +
                  Translate(settings_.trans_sens, sens).dvbe);
}

double Scrambler::Evaluate(double sec, double sens,
                           SaturationCounter& counter) const noexcept {
  const auto s = Translate(settings_.trans_sec, sec);
  const auto x = Translate(settings_.trans_sens, sens);
  counter.sec += s.saturated;
  counter.sens += x.saturated;
  return FromDvbe(s.dvbe + x.dvbe);
}

Waveform Scrambler::Apply(double sec, const Waveform& sens,
                          SaturationCounter& counter) const {
  std::vector<double> out(sens.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = Evaluate(sec, sens[k], counter);
  }
  return Waveform(sens.grid(), std::move(out));
}

std::vector<DcSweepRow> DcSweep(const Scrambler& scrambler,
                                std::span<const double> sec_values,
                                double sens_lo, double sens_hi,
                                std::size_t n_points) {
  if (n_points < 2) throw ConfigError("n_points", "must be >= 2");
  if (!(sens_lo < sens_hi)) {
    throw ConfigError("sens_range", "lower bound must be below upper bound");
  }
  std::vector<DcSweepRow> rows;
  rows.reserve(sec_values.size() * n_points);
  const double step = (sens_hi - sens_lo) / static_cast<double>(n_points - 1);
  for (double sec : sec_values) {
    for (std::size_t i = 0; i < n_points; ++i) {
      // Pin the last point so the upper endpoint is hit exactly.
      const double sens =
          i + 1 == n_points ? sens_hi : sens_lo + step * static_cast<double>(i);
      rows.push_back({sec, sens, scrambler(sec, sens)});
    }
  }
  return rows;
}

void WriteDcSweepCsv(std::ostream& out, std::span<const DcSweepRow> rows) {
  out << "sec_volts,sens_volts,scram_volts\n";
  for (const auto& r : rows) {
    out << FormatDouble(r.sec) << ',' << FormatDouble(r.sens) << ','
        << FormatDouble(r.scram) << '\n';
  }
}

}  // namespace scramsim
