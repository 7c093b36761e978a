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

#include <vector>

#include "stabkit/caps.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/rng.hpp"
#include "stabkit/states.hpp"

namespace stabkit {

// How Bell difference samples are produced. Exact draws labels straight from
// the Weyl distribution table; Physical simulates the four-copy measurement
// protocol (two Bell-basis measurements of psi x psi, outcomes XORed).
enum class SampleMode { Exact, Physical };

// Reusable sampler with a cached inverse-CDF table.
//
// Exact mode caches the prefix sums of the Weyl distribution (needs
// n <= caps.max_dist_qubits). Physical mode caches the prefix sums of the
// single Bell-pair measurement distribution (needs 2n <= caps.max_state_qubits
// for the two-copy statevector). Either way, sample() is two binary searches
// at worst and the table is immutable, so one sampler may serve many threads
// as long as each thread brings its own RngStream.
class BellSampler {
 public:
  BellSampler(const PureState& psi, SampleMode mode, const Caps& caps = {});

  int n() const { return n_; }
  SampleMode mode() const { return mode_; }

  // One Bell difference sample, distributed as the Weyl distribution of psi.
  F2Vec sample(RngStream& rng) const;

 private:
  int n_ = 0;
  SampleMode mode_ = SampleMode::Exact;
  std::vector<double> cdf_;

  uint64_t draw_index(RngStream& rng) const;
};

// Convenience wrapper: builds a sampler and draws once. Prefer BellSampler
// for repeated draws from the same state.
F2Vec bell_difference_sample(const PureState& psi, SampleMode mode, RngStream& rng,
                             const Caps& caps = {});

// Outcome distribution of one Bell-basis measurement of psi x psi, indexed by
// the decoded phase-space label word (pairs measuring as |Phi+> decode to 0).
// Convolving this table with itself over XOR reproduces the Weyl distribution.
std::vector<double> bell_pair_distribution(const PureState& psi, const Caps& caps = {});

// Measures W_x on each of two independent copies of psi and returns the
// product of the two +-1 outcomes, so the expected value is <W_x>^2.
int weyl_twocopy_measure(const PureState& psi, const F2Vec& x, RngStream& rng);

}  // namespace stabkit
