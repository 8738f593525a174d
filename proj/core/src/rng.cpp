// Copyright 2026 The scramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace scramsim {

std::uint64_t Mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t master, StreamRole role,
                         std::uint64_t index) noexcept {
  std::uint64_t h = Mix64(master);
  h = Mix64(h ^ (static_cast<std::uint64_t>(role) * 0x9e3779b97f4a7c15ULL));
  h = Mix64(h ^ ((index + 1) * 0xbf58476d1ce4e5b9ULL));
  return h;
}

double RngStream::NextUnit() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double RngStream::NextSymmetric() { return 2.0 * NextUnit() - 1.0; }

double RngStream::NextGaussian() {
  const double u1 = 1.0 - NextUnit();  // (0, 1]
  const double u2 = NextUnit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace scramsim
