// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "scramsim/error.hpp"

namespace scramsim {

double AdcConfig::lsb() const noexcept { return std::ldexp(v_ref, -bits); }

void AdcConfig::Validate() const {
  if (bits < 8 || bits > 16) {
    throw ConfigError("verifier.adc.bits", "must be in [8, 16]");
  }
  if (!(v_ref > 0.0) || !std::isfinite(v_ref)) {
    throw ConfigError("verifier.adc.v_ref", "must be positive");
  }
}

double Quantize(const AdcConfig& adc, double v) noexcept {
  const double lsb = adc.lsb();
  // std::round rounds halfway cases away from zero.
  return std::round(std::clamp(v, 0.0, adc.v_ref) / lsb) * lsb;
}

void VerifierConfig::Validate() const {
  adc.Validate();
  if (!(v_th_detect >= 0.0) || !std::isfinite(v_th_detect)) {
    throw ConfigError("verifier.v_th_detect", "must be finite and >= 0");
  }
  if (debounce < 1) throw ConfigError("verifier.debounce", "must be >= 1");
}

Verdict VerifyStream(const VerifierConfig& cfg, const Scrambler& scrambler,
                     double sec, const Waveform& sens_line,
                     const Waveform& scram_line) {
  cfg.Validate();
  if (!(sens_line.grid() == scram_line.grid())) {
    throw Error("sens and scram lines are sampled on different grids");
  }
  const std::size_t n = sens_line.size();
  Verdict v;
  v.scram_local.resize(n);
  v.diff.resize(n);
  v.tampered.assign(n, 0);

  int run = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double local = scrambler.Evaluate(sec, sens_line[k], v.saturation);
    v.scram_local[k] = local;
    v.diff[k] = std::abs(Quantize(cfg.adc, scram_line[k]) -
                         Quantize(cfg.adc, local));
    run = v.diff[k] > cfg.v_th_detect ? run + 1 : 0;
    if (run >= cfg.debounce) {
      v.tampered[k] = 1;
      ++v.detections;
      if (!v.first_detection) {
        v.first_detection = Detection{k, sens_line.grid().time_at(k)};
      }
    }
  }
  return v;
}

void WriteDiffCsv(std::ostream& out, const TimeGrid& grid,
                  const Verdict& verdict) {
  out << "time_s,diff_volts,detected\n";
  for (std::size_t k = 0; k < verdict.diff.size(); ++k) {
    out << FormatDouble(grid.time_at(k)) << ',' << FormatDouble(verdict.diff[k])
        << ',' << static_cast<int>(verdict.tampered[k]) << '\n';
  }
}

CalibrationReport CalibrateThreshold(const Scrambler& scrambler,
                                     const AdcConfig& adc,
                                     std::span<const double> secrets,
                                     const Waveform& stimulus,
                                     const NoiseSpec& noise,
                                     std::size_t n_trials,
                                     double safety_factor, std::uint64_t seed) {
  adc.Validate();
  if (n_trials < 1) throw ConfigError("calibration.n_trials", "must be >= 1");
  if (!(safety_factor >= 1.0) || !std::isfinite(safety_factor)) {
    throw ConfigError("calibration.safety_factor", "must be >= 1");
  }
  if (secrets.empty()) {
    throw ConfigError("calibration.secret_offsets", "no secrets to calibrate");
  }

  CalibrationReport report;
  report.noise = noise;
  report.seed = seed;
  report.n_trials = n_trials;
  report.safety_factor = safety_factor;
  report.secrets.assign(secrets.begin(), secrets.end());
  report.per_secret_max_diff.assign(secrets.size(), 0.0);

  // The ECU side never sees the noise, so its codes depend only on the secret.
  std::vector<std::vector<double>> local_codes(secrets.size());
  SaturationCounter ignored;
  for (std::size_t s = 0; s < secrets.size(); ++s) {
    local_codes[s].resize(stimulus.size());
    for (std::size_t k = 0; k < stimulus.size(); ++k) {
      local_codes[s][k] =
          Quantize(adc, scrambler.Evaluate(secrets[s], stimulus[k], ignored));
    }
  }

  for (std::size_t trial = 0; trial < n_trials; ++trial) {
    RngStream stream(seed, StreamRole::kTrial, trial);
    const Waveform noisy =
        Add(stimulus, GenerateNoise(stimulus.grid(), noise, stream));
    for (std::size_t s = 0; s < secrets.size(); ++s) {
      double& worst = report.per_secret_max_diff[s];
      for (std::size_t k = 0; k < noisy.size(); ++k) {
        const double tx = Quantize(
            adc, scrambler.Evaluate(secrets[s], noisy[k], report.saturation));
        worst = std::max(worst, std::abs(tx - local_codes[s][k]));
      }
    }
  }

  const auto it = std::max_element(report.per_secret_max_diff.begin(),
                                   report.per_secret_max_diff.end());
  report.argmax_index =
      static_cast<std::size_t>(it - report.per_secret_max_diff.begin());
  report.argmax_secret = report.secrets[report.argmax_index];
  report.observed_max = *it;
  report.v_th_detect = safety_factor * report.observed_max;
  return report;
}

}  // namespace scramsim
