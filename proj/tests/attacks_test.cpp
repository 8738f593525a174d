// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "scramsim/attacks.hpp"
#include "scramsim/error.hpp"

using namespace scramsim;

namespace {
const TimeGrid kGrid(100e3, 0.1);
const Waveform kSine = SineSensor(kGrid, 1e3, 0.5, 4.5);

AttackSpec Ramp(double slope, double start = 0.0) {
  return {AttackKind::kRamp, start, slope, 0.0};
}
}  // namespace

TEST(Inject, NoneIsIdentity) {
  EXPECT_EQ(Inject(AttackSpec{}, kSine), kSine);
}

TEST(Inject, RampAddsSlopeTimesElapsed) {
  // 1 V/s is 1 mV per 1 ms sensor period.
  const Waveform t = Inject(Ramp(1.0), kSine);
  const std::size_t k = 4723;  // t = 47.23 ms
  EXPECT_NEAR(t[k] - kSine[k], 0.04723, 1e-12);
  EXPECT_NEAR(*InjectedAmplitude(Ramp(1.0), 0.04723), 0.04723, 1e-15);
  EXPECT_EQ(*InjectedAmplitude(Ramp(1.0), 0.0), 0.0);
}

TEST(Inject, StepLeavesEarlierSamplesUntouched) {
  const AttackSpec step{AttackKind::kStep, 0.005, 0.1, 0.0};
  const Waveform t = Inject(step, kSine);
  EXPECT_EQ(t[499], kSine[499]);  // 4.99 ms
  EXPECT_EQ(t[500], kSine[500] + 0.1);
  EXPECT_EQ(*InjectedAmplitude(step, 0.004), 0.0);
  EXPECT_EQ(*InjectedAmplitude(step, 0.02), 0.1);
}

TEST(Inject, ScaleIsMultiplicative) {
  const AttackSpec scale{AttackKind::kScale, 0.0, 1.03, 0.0};
  const Waveform t = Inject(scale, kSine);
  for (std::size_t k = 0; k < t.size(); k += 97) ASSERT_EQ(t[k], kSine[k] * 1.03);
  EXPECT_FALSE(InjectedAmplitude(scale, 0.01).has_value());
}

TEST(Inject, RampDifferenceIsNonNegativeNonDecreasing) {
  const Waveform t = Inject(Ramp(2.5, 0.013), kSine);
  double prev = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double d = t[k] - kSine[k];
    ASSERT_GE(d, -1e-15);
    ASSERT_GE(d, prev - 1e-15);
    prev = d;
  }
}

TEST(Inject, StaircaseAdvancesOncePerPeriod) {
  const AttackSpec stair{AttackKind::kRamp, 0.0, 1.0, 0.001};
  EXPECT_EQ(*InjectedAmplitude(stair, 0.0005), 0.0);
  EXPECT_NEAR(*InjectedAmplitude(stair, 0.0015), 0.001, 1e-15);
  EXPECT_NEAR(*InjectedAmplitude(stair, 0.04723), 0.047, 1e-15);
}

TEST(Inject, CommutesWithTruncation) {
  for (const AttackSpec& spec :
       {Ramp(1.0, 0.002), AttackSpec{AttackKind::kStep, 0.004, 0.05, 0.0},
        AttackSpec{AttackKind::kScale, 0.001, 0.9, 0.0}}) {
    EXPECT_EQ(Inject(spec, kSine).Truncated(777), Inject(spec, kSine.Truncated(777)));
  }
}

TEST(AttackSpec, Validation) {
  EXPECT_THROW(Ramp(-1.0).Validate(), ConfigError);
  EXPECT_THROW(Ramp(1.0, -0.1).Validate(), ConfigError);
  EXPECT_NO_THROW((AttackSpec{AttackKind::kStep, 0.0, -0.2, 0.0}.Validate()));
  EXPECT_THROW(AttackKindFromString("replay"), ConfigError);
  EXPECT_EQ(AttackKindFromString("ramp"), AttackKind::kRamp);
}
