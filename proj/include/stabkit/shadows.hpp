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
#include <span>
#include <vector>

#include "stabkit/caps.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/rng.hpp"
#include "stabkit/stabilizer.hpp"
#include "stabkit/states.hpp"

namespace stabkit {

// One random Clifford measurement: the circuit that was applied and the
// computational-basis outcome observed afterwards.
struct ShadowSample {
  CliffordTableau clifford;
  uint64_t outcome = 0;

  friend bool operator==(const ShadowSample&, const ShadowSample&) = default;
};

// An immutable batch of measurements. batch_count fixes the median-of-means
// grouping used by the estimators; samples beyond the largest multiple of
// batch_count are dropped at construction so batches stay equal-sized.
class ShadowSet {
 public:
  ShadowSet(int n, std::vector<ShadowSample> samples, int batch_count = 1);

  int n() const { return n_; }
  int batch_count() const { return batch_count_; }
  size_t size() const { return samples_.size(); }
  size_t batch_size() const { return samples_.size() / batch_count_; }
  const std::vector<ShadowSample>& samples() const { return samples_; }

  friend bool operator==(const ShadowSet&, const ShadowSet&) = default;

 private:
  int n_ = 0;
  int batch_count_ = 1;
  std::vector<ShadowSample> samples_;
};

// Draws m uniformly random Clifford circuits, applies each to psi, and
// Born-samples a computational-basis outcome from the result.
ShadowSet collect_shadows(const PureState& psi, uint64_t m, RngStream& rng,
                          int batch_count = 1, const Caps& caps = {});

// Raw per-sample estimates (2^n + 1) |<b| U |phi>|^2 - 1 in sample order.
// Their mean is an unbiased estimate of |<phi|psi>|^2.
std::vector<double> per_sample_estimates(const ShadowSet& shadows,
                                         const StabilizerState& phi);

// Median over batches of the batch means of per_sample_estimates.
double estimate_stabilizer_fidelity(const ShadowSet& shadows, const StabilizerState& phi);

// Fidelity estimates for all 2^n sign assignments of each Lagrangian group,
// sharing one pass over the samples. result[g][s] equals
// estimate_stabilizer_fidelity for the s-th state that
// enumerate_stabilizer_states_for_group(groups[g]) would return.
std::vector<std::vector<double>> estimate_sign_families(const ShadowSet& shadows,
                                                        std::span<const Subspace> groups);

}  // namespace stabkit
