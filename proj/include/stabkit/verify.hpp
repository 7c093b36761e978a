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

#include <cstdint>

#include "stabkit/caps.hpp"

namespace stabkit {

// Tally of the duality identity checks over random (state, subspace) pairs:
// subspace mass against complement mass, convolved mass against the squared
// tail, the Fourier fixed point of the characteristic distribution, and the
// Fourier product rule for convolutions.
struct IdentitySuiteResult {
  int n = 0;
  int trials = 0;
  uint64_t seed = 0;
  int mass_duality_failures = 0;
  int conv_mass_failures = 0;
  int fourier_fixed_point_failures = 0;
  int fourier_product_failures = 0;
  double worst_error = 0;

  bool all_passed() const {
    return mass_duality_failures == 0 && conv_mass_failures == 0 &&
           fourier_fixed_point_failures == 0 && fourier_product_failures == 0;
  }
};

// Runs `trials` independent checks at width n. Mass dualities are held to
// 1e-9, Fourier identities to 1e-10.
IdentitySuiteResult run_identity_suite(int n, int trials, uint64_t seed, const Caps& caps = {});

}  // namespace stabkit
