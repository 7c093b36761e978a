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

#include "stabkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

std::vector<double> prefix_sums(const std::vector<double>& weights) {
  std::vector<double> cdf(weights.size());
  double acc = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    cdf[i] = acc;
  }
  return cdf;
}

}  // namespace

std::vector<double> bell_pair_distribution(const PureState& psi, const Caps& caps) {
  int n = psi.n();
  if (2 * n > caps.max_state_qubits) {
    throw cap_error("two-copy statevector needs " + std::to_string(2 * n) +
                    " qubits, cap is " + std::to_string(caps.max_state_qubits));
  }
  uint64_t dim = psi.dimension();
  std::vector<cplx> two(dim * dim);
  for (uint64_t v = 0; v < dim; ++v) {
    for (uint64_t u = 0; u < dim; ++u) {
      two[u | (v << n)] = psi.amplitude(u) * psi.amplitude(v);
    }
  }
  PureState pair = PureState::from_amplitudes(2 * n, std::move(two), caps);

  // Rotate each (copy-1 qubit i, copy-2 qubit i) pair from the Bell basis to
  // the computational basis; afterwards copy-1 bits read out b and copy-2
  // bits read out a.
  for (int i = 0; i < n; ++i) {
    apply_gate(pair, Gate{Gate::Kind::CNOT, i, n + i});
    apply_gate(pair, Gate{Gate::Kind::H, i});
  }

  std::vector<double> dist(dim * dim, 0.0);
  for (uint64_t w = 0; w < dim * dim; ++w) {
    dist[swap_halves(w, n)] = std::norm(pair.amplitude(w));
  }
  return dist;
}

BellSampler::BellSampler(const PureState& psi, SampleMode mode, const Caps& caps)
    : n_(psi.n()), mode_(mode) {
  if (mode == SampleMode::Exact) {
    if (n_ > caps.max_dist_qubits) {
      throw cap_error("exact sampling needs the full distribution table; n = " +
                      std::to_string(n_) + " exceeds cap " +
                      std::to_string(caps.max_dist_qubits));
    }
    cdf_ = prefix_sums(weyl_distribution(psi, caps).values());
  } else {
    cdf_ = prefix_sums(bell_pair_distribution(psi, caps));
  }
}

uint64_t BellSampler::draw_index(RngStream& rng) const {
  double u = rng.next_double() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<uint64_t>(it - cdf_.begin());
}

F2Vec BellSampler::sample(RngStream& rng) const {
  if (mode_ == SampleMode::Exact) return F2Vec(n_, draw_index(rng));
  // Two independent Bell-pair measurements of fresh copies, XORed.
  return F2Vec(n_, draw_index(rng) ^ draw_index(rng));
}

F2Vec bell_difference_sample(const PureState& psi, SampleMode mode, RngStream& rng,
                             const Caps& caps) {
  return BellSampler(psi, mode, caps).sample(rng);
}

int weyl_twocopy_measure(const PureState& psi, const F2Vec& x, RngStream& rng) {
  double p_plus = 0.5 * (1.0 + weyl_expectation(psi, x));
  int first = rng.next_double() < p_plus ? 1 : -1;
  int second = rng.next_double() < p_plus ? 1 : -1;
  return first * second;
}

}  // namespace stabkit
