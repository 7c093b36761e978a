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
#include "stabkit/sampling.hpp"
#include "stabkit/stabilizer.hpp"
#include "stabkit/states.hpp"

// Top-level learning algorithms. Every entry point takes an explicit seed and
// records it, together with all derived sample counts, in its report, so any
// run can be replayed exactly. Sample-count formulas use base-2 logarithms and
// round up.

namespace stabkit {

struct DistinguishReport {
  int n = 0;
  int verdict = 1;  // 0: consistent with Haar; 1: high stabilizer dimension
  int span_dim = 0;
  uint64_t m_used = 0;
  uint64_t seed = 0;
  SampleMode mode = SampleMode::Exact;
  double delta = 0;
};

// Decides between Haar-like and Clifford-dominated inputs by checking whether
// m = ceil(6n + 4.5 log2(2/delta)) samples span all of phase space. States
// prepared by circuits with few non-Clifford gates always land in a proper
// subspace, so their verdict is deterministically 1. By default all m samples
// are drawn even if full rank is reached early; early_exit stops at full rank.
DistinguishReport distinguish(const PureState& psi, double delta, uint64_t seed,
                              SampleMode mode = SampleMode::Exact, bool early_exit = false,
                              const Caps& caps = {});

struct FidelityReport {
  int n = 0;
  StabilizerState witness;
  double estimate = 0;      // clamped to [0, 1]
  double raw_estimate = 0;  // direct shadow-median output, may leave [0, 1]
  size_t clique_count = 0;
  size_t candidate_count = 0;
  uint64_t m_clique = 0;
  uint64_t m_shadow = 0;
  int batch_count = 0;
  uint64_t seed = 0;
  SampleMode mode = SampleMode::Exact;
  double tau = 0;
  double eps = 0;
  double delta = 0;
};

// Finds a stabilizer state close to psi: samples commuting-label cliques,
// then shadow-estimates every signed state of every full-dimension clique
// span and returns the argmax, ties broken by the lexicographic order of
// (generator rows, sign bits). When no sampled clique spans a full group the
// report falls back to the all-zero basis state. The deduped sample labels
// must fit caps.max_clique_vertices; the check runs before any shadow is
// collected.
FidelityReport estimate_fidelity(const PureState& psi, double tau, double eps, double delta,
                                 uint64_t seed, SampleMode mode = SampleMode::Exact,
                                 const Caps& caps = {});

// Mean of m two-copy Weyl measurements at sampled labels; unbiased for
// eta = E_{x~q}[2^n p(x)].
double eta_estimate(const PureState& psi, uint64_t m, uint64_t seed,
                    SampleMode mode = SampleMode::Exact, const Caps& caps = {});

struct TestReport {
  int n = 0;
  int verdict = 0;  // 1: stabilizer fidelity >= alpha1 side; 0: <= alpha2 side
  double eta_hat = 0;
  double threshold = 0;
  double gamma = 0;
  uint64_t m = 0;
  uint64_t seed = 0;
  SampleMode mode = SampleMode::Exact;
  double alpha1 = 0;
  double alpha2 = 0;
  double delta = 0;
};

// Tolerant two-sided test with promise gap gamma = alpha1^6 - (3 alpha2 + 1)/4;
// requires gamma > 0 and compares the eta estimate against alpha1^6 - gamma/2.
TestReport tolerant_test(const PureState& psi, double alpha1, double alpha2, double delta,
                         uint64_t seed, SampleMode mode = SampleMode::Exact,
                         const Caps& caps = {});

struct RegimeCheck {
  bool ours = false;
  bool gnw = false;
};

// Feasibility of the two tolerant-testing parameter regimes:
// ours when alpha1^6 > (3 alpha2 + 1)/4, gnw when 1 - 12 sqrt(1 - alpha1)
// exceeds (alpha2 + 1)/2.
RegimeCheck regime_check(double alpha1, double alpha2);

}  // namespace stabkit
