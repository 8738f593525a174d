// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "scramsim/rng.hpp"

namespace scramsim {

enum class OffsetKind { kUniform, kGaussianTruncated };

std::string_view ToString(OffsetKind kind);
OffsetKind OffsetKindFromString(std::string_view name);

/// Manufacturing spread of the op-amp input offset voltage. Draws always lie
/// in [-v_os_max, +v_os_max]. The truncated gaussian uses sigma = v_os_max/3
/// and rejection sampling.
struct OffsetDistribution {
  OffsetKind kind = OffsetKind::kUniform;
  double v_os_max = 0.007;

  friend bool operator==(const OffsetDistribution&,
                         const OffsetDistribution&) = default;
};

/// Non-inverting stage that turns the offset into the secret voltage.
struct SecretAmplifier {
  double gain = 143.0;
  double clamp = 1.0;

  friend bool operator==(const SecretAmplifier&,
                         const SecretAmplifier&) = default;
};

/// Linear temperature drift of the offset. Disabled by default.
struct DriftSpec {
  double temp_coeff = 0.0;  // V/K
  double delta_temp = 0.0;  // K

  friend bool operator==(const DriftSpec&, const DriftSpec&) = default;
};

/// A v_os_max of zero is the degenerate distribution at 0 V.
double SampleOffset(const OffsetDistribution& dist, RngStream& stream);

/// clamp(gain * v_os, -clamp, +clamp).
double SecretFromOffset(double v_os, const SecretAmplifier& amp);

/// v_os + temp_coeff * delta_temp, limited to +-2 * v_os_max.
double ApplyDrift(double v_os, const DriftSpec& drift, double v_os_max);

}  // namespace scramsim
