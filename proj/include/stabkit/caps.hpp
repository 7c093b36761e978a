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

namespace stabkit {

// Phase-space vectors live in F2^{2n}; one 64-bit word holds both halves.
inline constexpr int kMaxF2Qubits = 32;

// Resource ceilings for dense simulation and enumeration. Defaults are
// deliberately conservative; callers working on bigger instances pass an
// adjusted copy instead of editing these.
struct Caps {
  int max_state_qubits = 13;    // dense vectors hold 2^n amplitudes
  int max_dist_qubits = 6;      // full phase-space tables hold 4^n entries
  int max_enum_dim = 24;        // subspace element enumeration, 2^dim points
  int max_clique_vertices = 60; // commutation-graph size fed to enumeration
};

}  // namespace stabkit
