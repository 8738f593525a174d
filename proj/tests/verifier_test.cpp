// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracle.hpp"
#include "scramsim/error.hpp"
#include "scramsim/secretgen.hpp"
#include "scramsim/verifier.hpp"

using namespace scramsim;

namespace {

const AdcConfig kAdc{12, 5.0};
const Scrambler kScrambler{ScramblerSettings{}};
const TimeGrid kGrid(100e3, 0.01);

Waveform Constant(double v) { return DcSensor(kGrid, v); }

}  // namespace

TEST(Quantize, ReferencePoints) {
  EXPECT_EQ(kAdc.lsb(), 5.0 / 4096.0);
  EXPECT_EQ(Quantize(kAdc, 2.5), 2.5);  // code 2048
  // 2.5003 / LSB = 2048.246, nearest code is 2048.
  EXPECT_EQ(Quantize(kAdc, 2.5003), 2.5);
  EXPECT_EQ(Quantize(kAdc, 2.5009), 2049 * kAdc.lsb());
  EXPECT_EQ(Quantize(kAdc, -0.3), 0.0);
  EXPECT_EQ(Quantize(kAdc, 5.3), 5.0);
}

TEST(Quantize, TiesRoundAwayFromZero) {
  const double lsb = kAdc.lsb();
  EXPECT_EQ(Quantize(kAdc, 10.5 * lsb), 11 * lsb);
  EXPECT_EQ(Quantize(kAdc, 0.5 * lsb), lsb);
}

TEST(Quantize, IdempotentAndWithinHalfLsb) {
  RngStream s(17);
  for (int bits : {8, 10, 12, 16}) {
    const AdcConfig adc{bits, 5.0};
    for (int i = 0; i < 20000; ++i) {
      const double v = -0.5 + 6.0 * s.NextUnit();
      const double q = Quantize(adc, v);
      ASSERT_EQ(Quantize(adc, q), q);
      ASSERT_LE(std::abs(q - std::clamp(v, 0.0, 5.0)), adc.lsb() / 2);
      ASSERT_EQ(q, oracle::AdcCode(v, bits, 5.0) * adc.lsb());
    }
  }
}

TEST(AdcConfig, Validation) {
  EXPECT_THROW((AdcConfig{7, 5.0}.Validate()), ConfigError);
  EXPECT_THROW((AdcConfig{17, 5.0}.Validate()), ConfigError);
  EXPECT_THROW((AdcConfig{12, 0.0}.Validate()), ConfigError);
  EXPECT_NO_THROW((AdcConfig{16, 3.3}.Validate()));
}

TEST(VerifyStream, SelfConsistentLinkIsAuthentic) {
  const double sec = 0.4;
  const Waveform sens = SineSensor(kGrid, 1e3, 0.5, 4.5);
  SaturationCounter c;
  const Waveform scram = kScrambler.Apply(sec, sens, c);
  const VerifierConfig cfg{kAdc, 0.010, 1};
  const Verdict v = VerifyStream(cfg, kScrambler, sec, sens, scram);
  EXPECT_FALSE(v.first_detection);
  EXPECT_EQ(v.detections, 0u);
  for (double d : v.diff) ASSERT_LE(d, kAdc.lsb());
}

TEST(VerifyStream, ConstantDiffAboveThresholdTripsImmediately) {
  // Received signature sits 47.23 mV above the local one everywhere.
  const double sec = 1.0;
  const double local = kScrambler(sec, 2.0);
  const double offset = 0.04723;
  const VerifierConfig cfg{kAdc, 0.031586, 1};
  const Verdict v =
      VerifyStream(cfg, kScrambler, sec, Constant(2.0), Constant(local + offset));
  ASSERT_TRUE(v.first_detection);
  EXPECT_EQ(v.first_detection->sample, 0u);
  EXPECT_EQ(v.detections, kGrid.size());
  EXPECT_NEAR(v.diff[0], offset, kAdc.lsb());
}

TEST(VerifyStream, DiffEqualToThresholdIsAuthentic) {
  const double sec = 0.0;
  const double local = kScrambler(sec, 2.0);
  const double ql = Quantize(kAdc, local);
  // A received value exactly 20 codes away.
  const double rx = ql + 20 * kAdc.lsb();
  const VerifierConfig at{kAdc, 20 * kAdc.lsb(), 1};
  EXPECT_FALSE(
      VerifyStream(at, kScrambler, sec, Constant(2.0), Constant(rx))
          .first_detection);
  const VerifierConfig below{kAdc, 19.5 * kAdc.lsb(), 1};
  EXPECT_TRUE(
      VerifyStream(below, kScrambler, sec, Constant(2.0), Constant(rx))
          .first_detection);
}

TEST(VerifyStream, DebounceNeedsConsecutiveExceedances) {
  const double sec = 0.0;
  const Waveform sens = Constant(2.0);
  const double local = Quantize(kAdc, kScrambler(sec, 2.0));
  std::vector<double> rx(kGrid.size(), local);
  // Isolated spikes at 10 and 20, a run of three at 30..32.
  rx[10] = rx[20] = local + 0.1;
  rx[30] = rx[31] = rx[32] = local + 0.1;
  const Waveform scram(kGrid, rx);

  const Verdict one = VerifyStream({kAdc, 0.05, 1}, kScrambler, sec, sens, scram);
  EXPECT_EQ(one.first_detection->sample, 10u);
  EXPECT_EQ(one.detections, 5u);

  const Verdict three =
      VerifyStream({kAdc, 0.05, 3}, kScrambler, sec, sens, scram);
  ASSERT_TRUE(three.first_detection);
  EXPECT_EQ(three.first_detection->sample, 32u);
  EXPECT_EQ(three.detections, 1u);
  EXPECT_DOUBLE_EQ(three.first_detection->time_s, 32.0 / 100e3);
}

TEST(VerifyStream, RejectsMismatchedGrids) {
  EXPECT_THROW(VerifyStream({kAdc, 0.01, 1}, kScrambler, 0.0, Constant(2.0),
                            DcSensor(TimeGrid(50e3, 0.01), 1.0)),
               Error);
}

TEST(VerifyStream, DiffCsv) {
  const Verdict v = VerifyStream({kAdc, 0.01, 1}, kScrambler, 0.0,
                                 DcSensor(TimeGrid(1e3, 0.002), 2.0),
                                 DcSensor(TimeGrid(1e3, 0.002), 4.0));
  std::ostringstream out;
  WriteDiffCsv(out, TimeGrid(1e3, 0.002), v);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("time_s,diff_volts,detected\n", 0), 0u);
  EXPECT_NE(text.find("\n0.001,"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

class Calibration : public ::testing::Test {
 protected:
  const Waveform stimulus = SineSensor(kGrid, 1e3, 0.5, 4.5);
  const SecretAmplifier amp;
  const std::vector<double> secrets{SecretFromOffset(-0.007, amp),
                                    SecretFromOffset(0.0, amp),
                                    SecretFromOffset(0.007, amp)};
};

TEST_F(Calibration, NoNoiseLeavesOnlyQuantization) {
  const auto r = CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                    {NoiseKind::kNone, 0.0}, 3, 1.0, 1);
  EXPECT_LE(r.v_th_detect, kAdc.lsb());
}

TEST_F(Calibration, WorstCaseIsTheLargestSecret) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                      NoiseSpec{}, 10, 1.0, seed);
    EXPECT_EQ(r.argmax_index, 2u);
    EXPECT_EQ(r.argmax_secret, 1.0);
    EXPECT_GT(r.per_secret_max_diff[2], r.per_secret_max_diff[1]);
    EXPECT_GT(r.per_secret_max_diff[1], r.per_secret_max_diff[0]);
    EXPECT_EQ(r.v_th_detect, r.observed_max);
  }
}

TEST_F(Calibration, DefaultNoiseBelowSensorMargin) {
  const auto r = CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                    NoiseSpec{}, 10, 1.0, 1);
  // Slope bound at the top of the range: f(4.5) - f(4.5 - 67.5 mV)
  // = 4.127 * (1 - exp(-0.4352 * 0.0675)) = 119.5 mV, plus one LSB.
  EXPECT_GT(r.v_th_detect, 0.010);
  EXPECT_LT(r.v_th_detect, 0.1195 + kAdc.lsb());
}

TEST_F(Calibration, MonotoneInNoisePeak) {
  double prev = 0.0;
  for (double peak : {0.0, 0.01, 0.03, 0.0675, 0.135, 0.27}) {
    const auto r = CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                      {NoiseKind::kUniform, peak}, 5, 1.0, 42);
    ASSERT_GE(r.v_th_detect, prev) << peak;
    prev = r.v_th_detect;
  }
}

TEST_F(Calibration, SafetyFactorScales) {
  const auto a = CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                    NoiseSpec{}, 4, 1.0, 3);
  const auto b = CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                    NoiseSpec{}, 4, 1.2, 3);
  EXPECT_EQ(b.observed_max, a.observed_max);
  EXPECT_DOUBLE_EQ(b.v_th_detect, 1.2 * a.v_th_detect);
}

TEST_F(Calibration, RejectsBadArguments) {
  EXPECT_THROW(CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                  NoiseSpec{}, 0, 1.0, 1),
               ConfigError);
  EXPECT_THROW(CalibrateThreshold(kScrambler, kAdc, secrets, stimulus,
                                  NoiseSpec{}, 1, 0.9, 1),
               ConfigError);
}
