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
#include <iosfwd>
#include <span>
#include <string>

#include "stabkit/caps.hpp"
#include "stabkit/learners.hpp"
#include "stabkit/sampling.hpp"
#include "stabkit/shadows.hpp"
#include "stabkit/states.hpp"
#include "stabkit/verify.hpp"

// File formats and machine-readable output. All JSON emitters use a fixed
// key order and locale-free number formatting, so a rerun with the same seed
// reproduces its output byte for byte.

namespace stabkit {

const char* mode_name(SampleMode mode);
SampleMode parse_mode(const std::string& name);

// Amplitude text: one amplitude per line as "re" or "re im"; '#' comments
// and blank lines are skipped. The entry count must be a power of two and
// fixes the qubit count; a nonzero n_override must agree.
PureState load_state_file(const std::string& path, int n_override = 0, const Caps& caps = {});

// Gate list in the parse_circuit line format. The qubit count is n_override
// when nonzero, else one past the highest qubit index a gate touches.
PureState load_circuit_state(const std::string& path, int n_override = 0, const Caps& caps = {});

std::string report_json(const DistinguishReport& r);
std::string report_json(const FidelityReport& r);
std::string report_json(const TestReport& r);
std::string eta_report_json(int n, uint64_t m, uint64_t seed, SampleMode mode, double eta_hat);
std::string verify_report_json(const IdentitySuiteResult& r);

std::string samples_json(int n, uint64_t seed, SampleMode mode, std::span<const F2Vec> samples);
std::string samples_csv(std::span<const F2Vec> samples);

std::string distributions_json(const CharDistribution& p, const WeylDistribution& q);
std::string distributions_csv(const CharDistribution& p, const WeylDistribution& q);

// Every signed generator set with its dense amplitudes, n <= 3.
std::string catalog_json(int n);

// Feasibility of both tolerant-testing regimes over the [0,1]^2 lattice with
// the given step, endpoints included.
std::string regime_grid_csv(double step = 0.005);

// One JSON object per line: a header carrying n and batch_count, then one
// record per sample with the tableau rows as bitstrings, the row phase bits,
// and the measured outcome.
void save_shadows(std::ostream& out, const ShadowSet& shadows);
ShadowSet load_shadows(std::istream& in);

}  // namespace stabkit
