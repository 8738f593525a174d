// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/secretgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scramsim/error.hpp"

namespace scramsim {

std::string_view ToString(OffsetKind kind) {
  switch (kind) {
    case OffsetKind::kUniform:
      return "uniform";
    case OffsetKind::kGaussianTruncated:
      return "gaussian_truncated";
  }
  return "?";
}

OffsetKind OffsetKindFromString(std::string_view name) {
  if (name == "uniform") return OffsetKind::kUniform;
  if (name == "gaussian_truncated") return OffsetKind::kGaussianTruncated;
  throw ConfigError("device.offset.kind",
                    "unknown offset distribution '" + std::string(name) +
                        "' (uniform|gaussian_truncated)");
}

double SampleOffset(const OffsetDistribution& dist, RngStream& stream) {
  if (!(dist.v_os_max >= 0.0) || !std::isfinite(dist.v_os_max)) {
    throw ConfigError("device.offset.v_os_max", "must be finite and >= 0");
  }
  if (dist.v_os_max == 0.0) return 0.0;
  switch (dist.kind) {
    case OffsetKind::kUniform:
      return dist.v_os_max * stream.NextSymmetric();
    case OffsetKind::kGaussianTruncated: {
      const double sigma = dist.v_os_max / 3.0;
      // Acceptance is ~99.7%, so this terminates almost immediately.
      for (;;) {
        const double v = sigma * stream.NextGaussian();
        if (std::abs(v) <= dist.v_os_max) return v;
      }
    }
  }
  return 0.0;
}

double SecretFromOffset(double v_os, const SecretAmplifier& amp) {
  return std::clamp(amp.gain * v_os, -amp.clamp, amp.clamp);
}

double ApplyDrift(double v_os, const DriftSpec& drift, double v_os_max) {
  const double bound = 2.0 * v_os_max;
  return std::clamp(v_os + drift.temp_coeff * drift.delta_temp, -bound, bound);
}

}  // namespace scramsim
