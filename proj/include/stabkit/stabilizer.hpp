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

#ifndef STABKIT_STABILIZER_HPP_
#define STABKIT_STABILIZER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "stabkit/caps.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/rng.hpp"
#include "stabkit/states.hpp"

namespace stabkit {

// Exponent t in W_x W_y = i^t W_{x^y}, reduced mod 4. Even exactly when x and
// y commute, so products inside an isotropic span never leave {+1, -1}.
int weyl_product_phase(const F2Vec& x, const F2Vec& y);

inline int weyl_product_phase(int n, uint64_t x_word, uint64_t y_word) {
  const uint64_t ax = x_word & low_mask(n), bx = x_word >> n;
  const uint64_t ay = y_word & low_mask(n), by = y_word >> n;
  const int t = std::popcount(ax & bx) + std::popcount(ay & by) +
                2 * std::popcount(bx & ay) + 3 * std::popcount((ax ^ ay) & (bx ^ by));
  return t & 3;
}

// A Weyl operator with a real sign: sign * W_vec, sign in {+1, -1}.
struct SignedWeyl {
  F2Vec vec;
  int sign = 1;
};

// Symplectic action of a Clifford unitary on Weyl labels: row j stores
// U W_{e_j} U† = (-1)^{phase_bit(j)} W_{image(j)}. Rows j < n are the X-type
// basis labels, rows j >= n the Z-type ones. The image matrix is symplectic;
// two tableaus are equal iff they describe the same unitary up to global phase.
class CliffordTableau {
 public:
  static CliffordTableau identity(int n);

  // Builds the tableau of a gate word applied left to right. Only H, S, and
  // CNOT are accepted; other gate kinds are a parameter error.
  static CliffordTableau from_circuit(int n, std::span<const Gate> gates);

  int n() const { return n_; }
  const F2Vec& image(int j) const { return image_[static_cast<size_t>(j)]; }
  int phase_bit(int j) const { return phase_[static_cast<size_t>(j)]; }

  bool operator==(const CliffordTableau& o) const = default;

 private:
  CliffordTableau(int n, std::vector<F2Vec> image, std::vector<uint8_t> phase);

  int n_;
  std::vector<F2Vec> image_;
  std::vector<uint8_t> phase_;

  friend CliffordTableau compose(const CliffordTableau&, const CliffordTableau&);
  friend CliffordTableau inverse(const CliffordTableau& c);
  friend CliffordTableau random_clifford(int n, RngStream& rng);
  friend CliffordTableau tableau_from_rows(int n, std::span<const uint64_t> images,
                                           std::span<const uint8_t> phases);
};

// U (sign W_x) U† as a signed Weyl operator.
SignedWeyl conjugate_weyl(const CliffordTableau& c, const F2Vec& x);

// Tableau of outer∘inner (inner acts first).
CliffordTableau compose(const CliffordTableau& outer, const CliffordTableau& inner);

CliffordTableau inverse(const CliffordTableau& c);

// Exactly uniform over the Clifford group modulo global phase: the symplectic
// image is built pair by pair (uniform admissible X-image, then uniform
// admissible Z-image, shrinking to their joint symplectic complement), and the
// 2n phase bits are independent fair coins.
CliffordTableau random_clifford(int n, RngStream& rng);

// Rebuilds a tableau from serialized rows; validates symplecticity.
CliffordTableau tableau_from_rows(int n, std::span<const uint64_t> images,
                                  std::span<const uint8_t> phases);

// Stabilizer state presented by n signed commuting generators: the state is
// the unique joint +1 eigenvector of (-1)^{signs[i]} W_{generators[i]}.
// Generators are kept in reduced echelon form (pivots ascending), so equal
// states compare equal member-wise and the group's subspace rows coincide
// with the generator labels.
class StabilizerState {
 public:
  static StabilizerState zero_state(int n);
  static StabilizerState from_generators(int n, std::span<const F2Vec> generators,
                                         std::span<const uint8_t> signs);

  int n() const { return n_; }
  const std::vector<F2Vec>& generators() const { return gens_; }
  const std::vector<uint8_t>& signs() const { return signs_; }

  // The Lagrangian subspace spanned by the generator labels.
  Subspace group() const;

  bool operator==(const StabilizerState& o) const = default;

 private:
  StabilizerState(int n, std::vector<F2Vec> gens, std::vector<uint8_t> signs);

  int n_;
  std::vector<F2Vec> gens_;
  std::vector<uint8_t> signs_;
};

// Conjugates every generator; the result is the stabilizer state of U|φ⟩.
StabilizerState apply_clifford(const CliffordTableau& c, const StabilizerState& phi);

// Dense action of a tableau on an arbitrary state, up to one global phase:
// each basis vector |v⟩ = W_(v,0)|0^n⟩ is routed through the conjugation
// U|v⟩ = ± W_C(v,0) U|0^n⟩ with U|0^n⟩ reconstructed from the Z-row images.
// O(4^n) total.
PureState apply_clifford_dense(const CliffordTableau& c, const PureState& psi,
                               const Caps& caps = {});

// Unique unit vector fixed by all signed generators, built by projector
// products (I + s W)/2 on a basis vector of nonzero projected mass; global
// phase canonicalized.
PureState stabilizer_to_dense(const StabilizerState& phi, const Caps& caps = {});

// |⟨φ|ψ⟩|² = 2^{-n} Σ_{x in group} s(x) ⟨ψ|W_x|ψ⟩ by signed group
// enumeration, falling back to the dense inner product at large n.
double stabilizer_overlap(const StabilizerState& phi, const PureState& psi,
                          const Caps& caps = {});

// |⟨b|φ⟩|²: 2^{d-n} with d the number of independent Z-only group
// generators, when b satisfies their sign constraints; 0 otherwise.
double basis_state_probability(const StabilizerState& phi, uint64_t b);

// All 2^n stabilizer states whose group is s (must be Lagrangian): sign
// vectors in ascending counter order over the echelon basis rows, so bit i of
// the counter is the sign of row i.
std::vector<StabilizerState> enumerate_stabilizer_states_for_group(const Subspace& s);

// Span of the labels with |⟨ψ|W_x|ψ⟩| >= 1 - tol. Isotropic for any state
// that has such labels at all; enforced.
Subspace unsigned_stabilizer_group(const PureState& psi, double tol = 1e-6,
                                   const Caps& caps = {});

int stabilizer_dimension(const PureState& psi, const Caps& caps = {});

// A tableau C with C|φ⟩ = |0^n⟩ exactly (all-plus Z generators), obtained by
// completing φ's generators to a symplectic basis and inverting.
CliffordTableau clifford_mapping_to_zero(const StabilizerState& phi);

}  // namespace stabkit

#endif  // STABKIT_STABILIZER_HPP_
