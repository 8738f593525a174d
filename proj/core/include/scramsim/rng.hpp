// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace scramsim {

/// Name of the stream algorithm. Written into every config and report so a
/// reimplementation in another language can reproduce the exact samples.
inline constexpr std::string_view kPrngName = "mt19937_64+splitmix64/v1";

/// Role tags used when splitting the master seed into independent substreams.
enum class StreamRole : std::uint64_t {
  kNoise = 1,
  kOffset = 2,
  kTrial = 3,
  kDevice = 4,
};

/// splitmix64 output finalizer.
std::uint64_t Mix64(std::uint64_t x) noexcept;

/// Substream seed for (master, role, index):
///   h = Mix64(master)
///   h = Mix64(h ^ (role  * 0x9e3779b97f4a7c15))
///   h = Mix64(h ^ ((index + 1) * 0xbf58476d1ce4e5b9))
std::uint64_t DeriveSeed(std::uint64_t master, StreamRole role,
                         std::uint64_t index) noexcept;

/// Portable random stream. Draws are built from raw mt19937_64 words rather
/// than std:: distributions, whose output is implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  RngStream(std::uint64_t master, StreamRole role, std::uint64_t index)
      : engine_(DeriveSeed(master, role, index)) {}

  std::uint64_t NextU64() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits: (word >> 11) * 2^-53.
  double NextUnit();

  /// Uniform on [-1, 1): 2 * NextUnit() - 1.
  double NextSymmetric();

  /// Standard normal via Box-Muller (cosine branch only; one normal per
  /// pair of words so the stream position stays predictable).
  double NextGaussian();

 private:
  std::mt19937_64 engine_;
};

}  // namespace scramsim
