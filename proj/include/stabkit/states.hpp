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

#include <array>
#include <complex>
#include <istream>
#include <span>
#include <vector>

#include "stabkit/caps.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/rng.hpp"

namespace stabkit {

using cplx = std::complex<double>;

// One circuit step. U1 carries an arbitrary single-qubit unitary, row-major;
// the other kinds ignore the matrix. CNOT uses q0 as control, q1 as target.
struct Gate {
  enum class Kind { H, S, T, CNOT, U1 };
  Kind kind = Kind::H;
  int q0 = 0;
  int q1 = 0;
  std::array<cplx, 4> u{};
};

// Text format, one gate per line: "H q", "S q", "T q", "CNOT qc qt",
// "U1 q re00 im00 re01 im01 re10 im10 re11 im11". Blank lines and lines
// starting with '#' are skipped. Qubit bounds are checked at simulation time.
std::vector<Gate> parse_circuit(std::istream& in);
std::vector<Gate> parse_circuit_text(const std::string& text);

// Dense n-qubit pure state. Amplitude index bit q is the computational basis
// bit of qubit q, matching the a/b packing of F2Vec. States are normalized on
// construction; inputs off by more than 1e-6 in norm are rejected.
class PureState {
 public:
  static PureState from_amplitudes(int n, std::vector<cplx> amps, const Caps& caps = {});
  static PureState basis_state(int n, uint64_t index, const Caps& caps = {});
  static PureState zero_state(int n, const Caps& caps = {}) { return basis_state(n, 0, caps); }

  int n() const { return n_; }
  uint64_t dimension() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(uint64_t index) const { return amps_[index]; }

  // Rotate the global phase so the first nonzero amplitude is positive real.
  void canonicalize_phase();

 private:
  PureState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {}
  friend void apply_gate(PureState&, const Gate&);
  friend PureState apply_weyl(const PureState&, const F2Vec&);
  int n_;
  std::vector<cplx> amps_;
};

void apply_gate(PureState& psi, const Gate& g);
PureState from_circuit(int n, std::span<const Gate> gates, const Caps& caps = {});

// W_x applied to psi (exact phase convention: W_x = i^{a.b} X^a Z^b).
PureState apply_weyl(const PureState& psi, const F2Vec& x);

// Haar-random state: i.i.d. complex Gaussian amplitudes, normalized.
PureState haar_random(int n, RngStream& rng, const Caps& caps = {});

double fidelity(const PureState& psi, const PureState& phi);

// <psi| W_x |psi>, real by Hermiticity, clamped to [-1, 1].
double weyl_expectation(const PureState& psi, const F2Vec& x);

namespace detail {
// Dense table over F2^{2n}; entry index is the packed phase-space word.
class PhaseTable {
 public:
  int n() const { return n_; }
  const std::vector<double>& values() const { return v_; }
  double at(const F2Vec& x) const { return v_[x.bits()]; }
  double operator[](uint64_t idx) const { return v_[idx]; }
  size_t size() const { return v_.size(); }

 protected:
  PhaseTable() = default;
  PhaseTable(int n, std::vector<double> v) : n_(n), v_(std::move(v)) {}
  int n_ = 0;
  std::vector<double> v_;
};
}  // namespace detail

// c(x) = <W_x> / 2^{n/2}; the squares sum to 1.
class WeylCoefficients : public detail::PhaseTable {
 public:
  WeylCoefficients(int n, std::vector<double> v) : PhaseTable(n, std::move(v)) {}
};

// p(x) = <W_x>^2 / 2^n, the characteristic distribution.
class CharDistribution : public detail::PhaseTable {
 public:
  CharDistribution(int n, std::vector<double> v) : PhaseTable(n, std::move(v)) {}
};

// q(x) = 4^n (p * p)(x), the distribution of differenced two-copy outcomes.
class WeylDistribution : public detail::PhaseTable {
 public:
  WeylDistribution(int n, std::vector<double> v) : PhaseTable(n, std::move(v)) {}
};

WeylCoefficients weyl_coefficients(const PureState& psi, const Caps& caps = {});
CharDistribution char_distribution(const PureState& psi, const Caps& caps = {});
WeylDistribution weyl_distribution(const PureState& psi, const Caps& caps = {});
WeylDistribution weyl_distribution(const CharDistribution& p);

// f-hat(a) = 4^{-n} sum_x (-1)^{[a,x]} f(x). Input length must be a power
// of 4. Self-inverse up to the 4^n normalization.
std::vector<double> symplectic_fourier(std::span<const double> f);

// Sum of table entries over the elements of T.
double subspace_mass(const detail::PhaseTable& table, const Subspace& t);

}  // namespace stabkit
