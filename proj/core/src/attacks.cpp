// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/attacks.hpp"

#include <cmath>
#include <string>

#include "scramsim/error.hpp"

namespace scramsim {
namespace {

double RampAmount(const AttackSpec& spec, double t) {
  const double dt = t - spec.start_s;
  if (dt < 0.0) return 0.0;
  if (spec.staircase_period_s > 0.0) {
    return spec.param * spec.staircase_period_s *
           std::floor(dt / spec.staircase_period_s);
  }
  return spec.param * dt;
}

}  // namespace

std::string_view ToString(AttackKind kind) {
  switch (kind) {
    case AttackKind::kNone:
      return "none";
    case AttackKind::kRamp:
      return "ramp";
    case AttackKind::kStep:
      return "step";
    case AttackKind::kScale:
      return "scale";
  }
  return "?";
}

AttackKind AttackKindFromString(std::string_view name) {
  if (name == "none") return AttackKind::kNone;
  if (name == "ramp") return AttackKind::kRamp;
  if (name == "step") return AttackKind::kStep;
  if (name == "scale") return AttackKind::kScale;
  throw ConfigError("attack.kind", "unknown attack kind '" +
                                       std::string(name) +
                                       "' (none|ramp|step|scale)");
}

void AttackSpec::Validate() const {
  if (!(start_s >= 0.0) || !std::isfinite(start_s)) {
    throw ConfigError("attack.start_s", "must be finite and >= 0");
  }
  if (!std::isfinite(param)) throw ConfigError("attack.param", "not finite");
  if (kind == AttackKind::kRamp && param < 0.0) {
    throw ConfigError("attack.param", "ramp slope must be >= 0");
  }
  if (!(staircase_period_s >= 0.0) || !std::isfinite(staircase_period_s)) {
    throw ConfigError("attack.staircase_period_s", "must be finite and >= 0");
  }
}

Waveform Inject(const AttackSpec& spec, const Waveform& sens) {
  spec.Validate();
  if (spec.kind == AttackKind::kNone) return sens;
  const TimeGrid& grid = sens.grid();
  std::vector<double> out(sens.samples().begin(), sens.samples().end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double t = grid.time_at(k);
    if (t < spec.start_s) continue;
    switch (spec.kind) {
      case AttackKind::kRamp:
        out[k] += RampAmount(spec, t);
        break;
      case AttackKind::kStep:
        out[k] += spec.param;
        break;
      case AttackKind::kScale:
        out[k] *= spec.param;
        break;
      case AttackKind::kNone:
        break;
    }
  }
  return Waveform(grid, std::move(out));
}

std::optional<double> InjectedAmplitude(const AttackSpec& spec, double t) {
  switch (spec.kind) {
    case AttackKind::kNone:
      return 0.0;
    case AttackKind::kRamp:
      return RampAmount(spec, t);
    case AttackKind::kStep:
      return t >= spec.start_s ? spec.param : 0.0;
    case AttackKind::kScale:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace scramsim
