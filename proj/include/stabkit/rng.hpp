// Copyright 2026 The stabkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace stabkit {

namespace detail {
// SplitMix64 finalizer; full-avalanche mix of a 64-bit word.
inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

// Counter-based stream: output i is a pure function of (key, i), so streams
// can be split without coordination and replayed from the seed alone.
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream = 0)
      : key_(detail::mix64(seed ^ detail::mix64(stream + 0x632BE59BD9B4E019ULL))) {}

  // Child stream independent of this one and of other child ids.
  RngStream split(uint64_t child) const {
    RngStream s(0);
    s.key_ = detail::mix64(key_ + detail::mix64(child + 0x9E6C63D0876A9ULL));
    return s;
  }

  uint64_t next_u64() {
    ++ctr_;
    return detail::mix64(key_ + ctr_ * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Exactly uniform in [0, bound); rejection removes modulo bias.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (-bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bool() { return (next_u64() & 1) != 0; }

  // Standard normal via Box-Muller; second value of each pair is cached.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * next_double();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // UniformRandomBitGenerator interface.
  using result_type = uint64_t;
  static constexpr uint64_t min() { return 0; }
  static constexpr uint64_t max() { return ~0ULL; }
  uint64_t operator()() { return next_u64(); }

 private:
  uint64_t key_;
  uint64_t ctr_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace stabkit
