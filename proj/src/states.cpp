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

#include "stabkit/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace stabkit {

namespace {

constexpr double kNormTol = 1e-6;
constexpr double kUnitaryTol = 1e-9;

void check_state_qubits(int n, const Caps& caps) {
  if (n < 1) throw param_error("qubit count must satisfy n >= 1");
  if (n > caps.max_state_qubits) {
    throw cap_error("n = " + std::to_string(n) + " exceeds the dense-state cap " +
                    std::to_string(caps.max_state_qubits) +
                    "; raise max_state_qubits if 2^n amplitudes are affordable");
  }
}

void check_dist_qubits(int n, const Caps& caps) {
  if (n > caps.max_dist_qubits) {
    throw cap_error("n = " + std::to_string(n) + " exceeds the phase-space table cap " +
                    std::to_string(caps.max_dist_qubits) +
                    "; raise max_dist_qubits if 4^n entries are affordable");
  }
}

// In-place unnormalized Walsh-Hadamard transform, any arithmetic type.
template <typename T>
void wht(std::vector<T>& v) {
  size_t len = v.size();
  for (size_t h = 1; h < len; h <<= 1) {
    for (size_t i = 0; i < len; i += h << 1) {
      for (size_t j = i; j < i + h; ++j) {
        T x = v[j];
        T y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

double real_of_i_power(int k, cplx z) {
  switch (k & 3) {
    case 0: return z.real();
    case 1: return -z.imag();
    case 2: return -z.real();
    default: return z.imag();
  }
}

// Full expectation table e(x) = <W_x>, one Walsh-Hadamard pass per a-part.
std::vector<double> expectation_table(const PureState& psi) {
  int n = psi.n();
  size_t dim = size_t{1} << n;
  const auto& amps = psi.amplitudes();
  std::vector<double> out(size_t{1} << (2 * n));
  std::vector<cplx> g(dim);
  for (uint64_t a = 0; a < dim; ++a) {
    for (uint64_t v = 0; v < dim; ++v) g[v] = std::conj(amps[v ^ a]) * amps[v];
    wht(g);
    for (uint64_t b = 0; b < dim; ++b) {
      int k = std::popcount(a & b);
      double e = real_of_i_power(k, g[b]);
      out[a | (b << n)] = std::clamp(e, -1.0, 1.0);
    }
  }
  return out;
}

}  // namespace

PureState PureState::from_amplitudes(int n, std::vector<cplx> amps, const Caps& caps) {
  check_state_qubits(n, caps);
  if (amps.size() != size_t{1} << n) {
    throw param_error("amplitude count must be exactly 2^n");
  }
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  double norm = std::sqrt(norm2);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw param_error("state norm must satisfy |norm - 1| <= 1e-6 (got norm = " +
                      std::to_string(norm) + ")");
  }
  for (auto& a : amps) a /= norm;
  return PureState(n, std::move(amps));
}

PureState PureState::basis_state(int n, uint64_t index, const Caps& caps) {
  check_state_qubits(n, caps);
  std::vector<cplx> amps(size_t{1} << n);
  if (index >= amps.size()) throw param_error("basis index must be below 2^n");
  amps[index] = 1.0;
  return PureState(n, std::move(amps));
}

void PureState::canonicalize_phase() {
  for (auto& a : amps_) {
    double m = std::abs(a);
    if (m > 1e-12) {
      cplx rot = std::conj(a) / m;
      for (auto& b : amps_) b *= rot;
      return;
    }
  }
}

void apply_gate(PureState& psi, const Gate& g) {
  int n = psi.n_;
  auto& amps = psi.amps_;
  uint64_t dim = amps.size();
  auto check_q = [&](int q) {
    if (q < 0 || q >= n) throw param_error("gate qubit must satisfy 0 <= q < n");
  };
  const double inv_rt2 = 1.0 / std::numbers::sqrt2;
  switch (g.kind) {
    case Gate::Kind::H: {
      check_q(g.q0);
      uint64_t s = 1ULL << g.q0;
      for (uint64_t v = 0; v < dim; ++v) {
        if (v & s) continue;
        cplx a = amps[v], b = amps[v | s];
        amps[v] = (a + b) * inv_rt2;
        amps[v | s] = (a - b) * inv_rt2;
      }
      break;
    }
    case Gate::Kind::S: {
      check_q(g.q0);
      uint64_t s = 1ULL << g.q0;
      for (uint64_t v = 0; v < dim; ++v) {
        if (v & s) amps[v] *= cplx(0.0, 1.0);
      }
      break;
    }
    case Gate::Kind::T: {
      check_q(g.q0);
      uint64_t s = 1ULL << g.q0;
      cplx phase = std::polar(1.0, std::numbers::pi / 4.0);
      for (uint64_t v = 0; v < dim; ++v) {
        if (v & s) amps[v] *= phase;
      }
      break;
    }
    case Gate::Kind::CNOT: {
      check_q(g.q0);
      check_q(g.q1);
      if (g.q0 == g.q1) throw param_error("CNOT control and target must differ");
      uint64_t c = 1ULL << g.q0, t = 1ULL << g.q1;
      for (uint64_t v = 0; v < dim; ++v) {
        if ((v & c) && !(v & t)) std::swap(amps[v], amps[v | t]);
      }
      break;
    }
    case Gate::Kind::U1: {
      check_q(g.q0);
      const auto& u = g.u;
      // Columns orthonormal within 1e-9.
      double c0 = std::norm(u[0]) + std::norm(u[2]);
      double c1 = std::norm(u[1]) + std::norm(u[3]);
      cplx cross = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
      if (std::abs(c0 - 1.0) > kUnitaryTol || std::abs(c1 - 1.0) > kUnitaryTol ||
          std::abs(cross) > kUnitaryTol) {
        throw param_error("U1 matrix must be unitary within 1e-9");
      }
      uint64_t s = 1ULL << g.q0;
      for (uint64_t v = 0; v < dim; ++v) {
        if (v & s) continue;
        cplx a = amps[v], b = amps[v | s];
        amps[v] = u[0] * a + u[1] * b;
        amps[v | s] = u[2] * a + u[3] * b;
      }
      break;
    }
  }
}

PureState from_circuit(int n, std::span<const Gate> gates, const Caps& caps) {
  PureState psi = PureState::basis_state(n, 0, caps);
  for (const auto& g : gates) apply_gate(psi, g);
  return psi;
}

PureState apply_weyl(const PureState& psi, const F2Vec& x) {
  if (x.n() != psi.n()) throw param_error("operator and state must share n");
  uint64_t a = x.a_bits(), b = x.b_bits();
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cplx front = kIPow[std::popcount(a & b) & 3];
  uint64_t dim = psi.amps_.size();
  std::vector<cplx> out(dim);
  for (uint64_t v = 0; v < dim; ++v) {
    double sign = (std::popcount(b & v) & 1) ? -1.0 : 1.0;
    out[v ^ a] = front * sign * psi.amps_[v];
  }
  return PureState(psi.n_, std::move(out));
}

PureState haar_random(int n, RngStream& rng, const Caps& caps) {
  check_state_qubits(n, caps);
  std::vector<cplx> amps(size_t{1} << n);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = cplx(rng.next_gaussian(), rng.next_gaussian());
    norm2 += std::norm(a);
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return PureState::from_amplitudes(n, std::move(amps), caps);
}

double fidelity(const PureState& psi, const PureState& phi) {
  if (psi.n() != phi.n()) throw param_error("fidelity requires matching n");
  cplx inner = 0.0;
  for (uint64_t v = 0; v < psi.dimension(); ++v) {
    inner += std::conj(psi.amplitude(v)) * phi.amplitude(v);
  }
  return std::norm(inner);
}

double weyl_expectation(const PureState& psi, const F2Vec& x) {
  if (x.n() != psi.n()) throw param_error("operator and state must share n");
  uint64_t a = x.a_bits(), b = x.b_bits();
  cplx s = 0.0;
  const auto& amps = psi.amplitudes();
  for (uint64_t v = 0; v < psi.dimension(); ++v) {
    double sign = (std::popcount(b & v) & 1) ? -1.0 : 1.0;
    s += sign * std::conj(amps[v ^ a]) * amps[v];
  }
  double e = real_of_i_power(std::popcount(a & b), s);
  return std::clamp(e, -1.0, 1.0);
}

WeylCoefficients weyl_coefficients(const PureState& psi, const Caps& caps) {
  check_dist_qubits(psi.n(), caps);
  auto e = expectation_table(psi);
  double scale = std::pow(2.0, -0.5 * psi.n());
  for (auto& v : e) v *= scale;
  return WeylCoefficients(psi.n(), std::move(e));
}

CharDistribution char_distribution(const PureState& psi, const Caps& caps) {
  check_dist_qubits(psi.n(), caps);
  auto e = expectation_table(psi);
  double scale = std::pow(2.0, -psi.n());
  for (auto& v : e) v = v * v * scale;
  return CharDistribution(psi.n(), std::move(e));
}

WeylDistribution weyl_distribution(const CharDistribution& p) {
  // q = 4^n (p * p). Because p is its own transform up to 2^n scaling, the
  // convolution collapses to one transform of the pointwise square:
  // q(x) = sum_a (-1)^{[a,x]} p(a)^2.
  int n = p.n();
  std::vector<double> buf(p.values());
  for (auto& v : buf) v *= v;
  wht(buf);
  std::vector<double> q(buf.size());
  for (uint64_t x = 0; x < q.size(); ++x) {
    q[x] = std::max(buf[swap_halves(x, n)], 0.0);
  }
  return WeylDistribution(n, std::move(q));
}

WeylDistribution weyl_distribution(const PureState& psi, const Caps& caps) {
  return weyl_distribution(char_distribution(psi, caps));
}

std::vector<double> symplectic_fourier(std::span<const double> f) {
  size_t len = f.size();
  if (len == 0 || (len & (len - 1)) != 0 || (std::countr_zero(len) & 1) != 0) {
    throw param_error("transform input length must be a power of 4");
  }
  int n = static_cast<int>(std::countr_zero(len) / 2);
  std::vector<double> buf(f.begin(), f.end());
  wht(buf);
  std::vector<double> out(len);
  double scale = 1.0 / static_cast<double>(len);
  for (uint64_t a = 0; a < len; ++a) out[a] = buf[swap_halves(a, n)] * scale;
  return out;
}

double subspace_mass(const detail::PhaseTable& table, const Subspace& t) {
  if (t.n() != table.n()) throw param_error("subspace and table must share n");
  double mass = 0.0;
  for (const auto& x : enumerate_elements(t)) mass += table.at(x);
  return mass;
}

std::vector<Gate> parse_circuit(std::istream& in) {
  std::vector<Gate> gates;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op[0] == '#') continue;
    Gate g;
    auto fail = [&](const std::string& why) {
      throw io_error("circuit line " + std::to_string(lineno) + ": " + why);
    };
    if (op == "H" || op == "S" || op == "T") {
      g.kind = op == "H" ? Gate::Kind::H : (op == "S" ? Gate::Kind::S : Gate::Kind::T);
      if (!(ls >> g.q0)) fail("expected one qubit index");
    } else if (op == "CNOT") {
      g.kind = Gate::Kind::CNOT;
      if (!(ls >> g.q0 >> g.q1)) fail("expected control and target qubit indices");
    } else if (op == "U1") {
      g.kind = Gate::Kind::U1;
      if (!(ls >> g.q0)) fail("expected a qubit index");
      for (int k = 0; k < 4; ++k) {
        double re, im;
        if (!(ls >> re >> im)) fail("expected 8 matrix values after the qubit index");
        g.u[k] = cplx(re, im);
      }
    } else {
      fail("unknown gate '" + op + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
    gates.push_back(g);
  }
  return gates;
}

std::vector<Gate> parse_circuit_text(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

}  // namespace stabkit
