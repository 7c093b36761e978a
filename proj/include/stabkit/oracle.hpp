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
#include <utility>
#include <vector>

#include "stabkit/cliques.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/states.hpp"

// Brute-force reference implementations. Everything here recomputes phase and
// projector arithmetic from first principles instead of calling the fast
// paths, so agreement between the two sides is meaningful evidence.

namespace stabkit {

// One catalog entry: a dense stabilizer state plus the group and signs that
// produced it.
struct CatalogEntry {
  PureState state;
  std::vector<uint64_t> generator_rows;
  uint64_t sign_bits = 0;
};

// Every n-qubit stabilizer state exactly once (as rays), built by exhaustive
// isotropic extension to Lagrangian groups and explicit group-average
// projectors. Entries are ordered by generator rows, then sign bits.
class StabilizerCatalog {
 public:
  explicit StabilizerCatalog(int n);

  int n() const { return n_; }
  size_t size() const { return entries_.size(); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  int n_ = 0;
  std::vector<CatalogEntry> entries_;
};

// Shared immutable catalog for n <= 3; built on first use.
const StabilizerCatalog& stabilizer_catalog(int n);

// Exact stabilizer fidelity by scanning the catalog; returns the maximum
// squared overlap and the first entry attaining it in catalog order.
std::pair<double, const CatalogEntry*> brute_force_stabilizer_fidelity(const PureState& psi);

// Literal double sum q(x) = sum_y p(y) p(x ^ y) with p recomputed from raw
// operator matrix elements; quadratic in table size, n <= 4.
WeylDistribution direct_weyl_distribution(const PureState& psi);

// eta = 4^n sum_x p(x)^3, from first-principles p.
double exact_eta(const PureState& psi, const Caps& caps = {});

// All maximal cliques by filtering every vertex subset; at most 15 vertices.
std::vector<std::vector<int>> naive_maximal_cliques(const CommGraph& g);

}  // namespace stabkit
