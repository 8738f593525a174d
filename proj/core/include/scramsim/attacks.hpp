// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include "scramsim/waveform.hpp"

namespace scramsim {

enum class AttackKind { kNone, kRamp, kStep, kScale };

std::string_view ToString(AttackKind kind);
AttackKind AttackKindFromString(std::string_view name);

/// Man-in-the-middle manipulation of the sens line.
///
/// `param` is the slope in V/s for a ramp, the offset in V for a step and
/// the dimensionless factor for a scale attack. With staircase_period_s > 0
/// the ramp advances in whole periods: slope * period * floor(dt / period).
struct AttackSpec {
  AttackKind kind = AttackKind::kNone;
  double start_s = 0.0;
  double param = 0.0;
  double staircase_period_s = 0.0;

  void Validate() const;

  friend bool operator==(const AttackSpec&, const AttackSpec&) = default;
};

/// Tampered copy of `sens`. Samples before start_s are returned unchanged.
Waveform Inject(const AttackSpec& spec, const Waveform& sens);

/// Additive magnitude of the attack at time t. std::nullopt for scale
/// attacks, which have no additive form.
std::optional<double> InjectedAmplitude(const AttackSpec& spec, double t);

}  // namespace scramsim
