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

#include "stabkit/stabilizer.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

int symp_words(uint64_t x, uint64_t y, int n) {
  return std::popcount(x & swap_halves(y, n)) & 1;
}

void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw param_error(std::string(what) + " requires matching qubit counts (" +
                      std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// Multiplies signed commuting Weyl words: (s1 W_x)(s2 W_y) = s W_{x^y}.
// The product phase must be real; odd phases indicate non-commuting inputs.
uint8_t combine_signs(uint64_t x, uint8_t sx, uint64_t y, uint8_t sy, int n) {
  int t = weyl_product_phase(n, x, y);
  if (t & 1) throw std::logic_error("signed product of non-commuting Weyl words");
  return static_cast<uint8_t>(sx ^ sy ^ (t >> 1));
}

// (I + s W_x)/2 applied to a raw, possibly unnormalized amplitude vector.
std::vector<cplx> project_signed_weyl(const std::vector<cplx>& amps, uint64_t word,
                                      int sign_bit, int n) {
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  uint64_t a = word & low_mask(n);
  uint64_t b = word >> n;
  cplx front = kIPow[std::popcount(a & b) & 3] * (sign_bit ? -1.0 : 1.0);
  std::vector<cplx> out(amps.size());
  for (uint64_t v = 0; v < amps.size(); ++v) {
    cplx w = front * (std::popcount(b & v) & 1 ? -amps[v] : amps[v]);
    out[v ^ a] = 0.5 * (amps[v ^ a] + w);
  }
  return out;
}

}  // namespace

int weyl_product_phase(const F2Vec& x, const F2Vec& y) {
  require_same_n(x.n(), y.n(), "weyl product");
  return weyl_product_phase(x.n(), x.bits(), y.bits());
}

CliffordTableau::CliffordTableau(int n, std::vector<F2Vec> image, std::vector<uint8_t> phase)
    : n_(n), image_(std::move(image)), phase_(std::move(phase)) {}

CliffordTableau CliffordTableau::identity(int n) {
  std::vector<F2Vec> image;
  image.reserve(2 * static_cast<size_t>(n));
  for (int j = 0; j < 2 * n; ++j) image.push_back(F2Vec::basis(n, j));
  return CliffordTableau(n, std::move(image), std::vector<uint8_t>(2 * static_cast<size_t>(n), 0));
}

CliffordTableau CliffordTableau::from_circuit(int n, std::span<const Gate> gates) {
  CliffordTableau c = identity(n);
  auto qubit_ok = [n](int q) { return q >= 0 && q < n; };
  for (const Gate& g : gates) {
    if (!qubit_ok(g.q0) || (g.kind == Gate::Kind::CNOT && (!qubit_ok(g.q1) || g.q0 == g.q1))) {
      throw param_error("gate qubits must satisfy 0 <= q < n and be distinct for CNOT");
    }
    if (g.kind == Gate::Kind::T || g.kind == Gate::Kind::U1) {
      throw param_error("tableau circuits accept H, S, CNOT only");
    }
    for (int j = 0; j < 2 * n; ++j) {
      uint64_t w = c.image_[j].bits();
      uint8_t& s = c.phase_[j];
      if (g.kind == Gate::Kind::H) {
        uint64_t a = (w >> g.q0) & 1, b = (w >> (n + g.q0)) & 1;
        s ^= static_cast<uint8_t>(a & b);
        w &= ~((1ULL << g.q0) | (1ULL << (n + g.q0)));
        w |= (b << g.q0) | (a << (n + g.q0));
      } else if (g.kind == Gate::Kind::S) {
        uint64_t a = (w >> g.q0) & 1, b = (w >> (n + g.q0)) & 1;
        s ^= static_cast<uint8_t>(a & b);
        w ^= a << (n + g.q0);
      } else {
        uint64_t ac = (w >> g.q0) & 1, bc = (w >> (n + g.q0)) & 1;
        uint64_t at = (w >> g.q1) & 1, bt = (w >> (n + g.q1)) & 1;
        s ^= static_cast<uint8_t>(ac & bt & (at ^ bc ^ 1));
        w ^= ac << g.q1;
        w ^= bt << (n + g.q0);
      }
      c.image_[j] = F2Vec(n, w);
    }
  }
  return c;
}

SignedWeyl conjugate_weyl(const CliffordTableau& c, const F2Vec& x) {
  require_same_n(c.n(), x.n(), "conjugation");
  int n = c.n();
  uint64_t y = 0;
  int acc = std::popcount(x.a_bits() & x.b_bits());
  uint64_t bits = x.bits();
  while (bits) {
    int j = std::countr_zero(bits);
    bits &= bits - 1;
    const F2Vec& img = c.image(j);
    acc += 2 * c.phase_bit(j) + weyl_product_phase(n, y, img.bits());
    y ^= img.bits();
  }
  acc &= 3;
  if (acc & 1) throw std::logic_error("conjugated Hermitian Weyl acquired an imaginary phase");
  return {F2Vec(n, y), acc == 0 ? 1 : -1};
}

CliffordTableau compose(const CliffordTableau& outer, const CliffordTableau& inner) {
  require_same_n(outer.n(), inner.n(), "composition");
  int n = outer.n();
  std::vector<F2Vec> image;
  std::vector<uint8_t> phase(2 * static_cast<size_t>(n));
  image.reserve(2 * static_cast<size_t>(n));
  for (int j = 0; j < 2 * n; ++j) {
    SignedWeyl sw = conjugate_weyl(outer, inner.image(j));
    image.push_back(sw.vec);
    phase[j] = static_cast<uint8_t>(inner.phase_bit(j) ^ (sw.sign < 0));
  }
  return CliffordTableau(n, std::move(image), std::move(phase));
}

CliffordTableau inverse(const CliffordTableau& c) {
  int n = c.n();
  auto swap_idx = [n](int i) { return i < n ? i + n : i - n; };
  // The symplectic inverse is J Mᵀ J with J the half-swap, so entry (i, j) of
  // the inverse reads bit swap(j) of column swap(i).
  std::vector<F2Vec> image;
  image.reserve(2 * static_cast<size_t>(n));
  for (int j = 0; j < 2 * n; ++j) {
    uint64_t w = 0;
    for (int i = 0; i < 2 * n; ++i) {
      if (c.image(swap_idx(i)).bit(swap_idx(j))) w |= 1ULL << i;
    }
    image.push_back(F2Vec(n, w));
  }
  std::vector<uint8_t> phase(2 * static_cast<size_t>(n));
  for (int j = 0; j < 2 * n; ++j) {
    SignedWeyl sw = conjugate_weyl(c, image[j]);
    if (sw.vec.bits() != (1ULL << j)) {
      throw std::logic_error("tableau inverse failed the roundtrip check");
    }
    phase[j] = static_cast<uint8_t>(sw.sign < 0);
  }
  return CliffordTableau(n, std::move(image), std::move(phase));
}

CliffordTableau random_clifford(int n, RngStream& rng) {
  if (n < 1 || n > kMaxF2Qubits) {
    throw param_error("random tableau requires 1 <= n <= " + std::to_string(kMaxF2Qubits));
  }
  std::vector<uint64_t> basis;
  basis.reserve(2 * static_cast<size_t>(n));
  for (int j = 0; j < 2 * n; ++j) basis.push_back(1ULL << j);

  auto combo = [&basis](uint64_t mask) {
    uint64_t w = 0;
    while (mask) {
      int k = std::countr_zero(mask);
      mask &= mask - 1;
      w ^= basis[static_cast<size_t>(k)];
    }
    return w;
  };

  std::vector<F2Vec> image(2 * static_cast<size_t>(n), F2Vec::zero(n));
  for (int step = 0; step < n; ++step) {
    uint64_t m = basis.size();
    // X-image: uniform nonzero vector of the remaining symplectic subspace.
    uint64_t c = combo(1 + rng.next_below((1ULL << m) - 1));
    // Z-image: uniform among the half that pairs with it; the form is
    // nondegenerate on the remaining subspace, so each try accepts w.p. 1/2.
    uint64_t d;
    do {
      d = combo(rng.next_below(1ULL << m));
    } while (symp_words(c, d, n) == 0);
    image[step] = F2Vec(n, c);
    image[static_cast<size_t>(n) + step] = F2Vec(n, d);

    // Shrink the basis to the joint symplectic complement of c and d.
    auto extract = [&](uint64_t probe) {
      size_t hit = basis.size();
      for (size_t i = 0; i < basis.size(); ++i) {
        if (symp_words(probe, basis[i], n)) {
          hit = i;
          break;
        }
      }
      if (hit == basis.size()) {
        throw std::logic_error("symplectic pairing vector missing from the working basis");
      }
      uint64_t u = basis[hit];
      basis.erase(basis.begin() + static_cast<ptrdiff_t>(hit));
      for (uint64_t& w : basis) {
        if (symp_words(probe, w, n)) w ^= u;
      }
      return u;
    };
    extract(c);
    extract(d);
  }

  std::vector<uint8_t> phase(2 * static_cast<size_t>(n));
  for (auto& p : phase) p = static_cast<uint8_t>(rng.next_bool());
  return CliffordTableau(n, std::move(image), std::move(phase));
}

CliffordTableau tableau_from_rows(int n, std::span<const uint64_t> images,
                                  std::span<const uint8_t> phases) {
  if (images.size() != 2 * static_cast<size_t>(n) || phases.size() != images.size()) {
    throw param_error("tableau rows must come as 2n images with 2n phase bits");
  }
  std::vector<F2Vec> image;
  image.reserve(images.size());
  for (uint64_t w : images) image.push_back(F2Vec(n, w));
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      int want = (j == i + n) ? 1 : 0;
      if (symp_words(image[i].bits(), image[j].bits(), n) != want) {
        throw param_error("tableau rows do not preserve the symplectic form");
      }
    }
  }
  std::vector<uint8_t> phase(phases.begin(), phases.end());
  for (auto& p : phase) p = p ? 1 : 0;
  return CliffordTableau(n, std::move(image), std::move(phase));
}

StabilizerState::StabilizerState(int n, std::vector<F2Vec> gens, std::vector<uint8_t> signs)
    : n_(n), gens_(std::move(gens)), signs_(std::move(signs)) {}

StabilizerState StabilizerState::zero_state(int n) {
  std::vector<F2Vec> gens;
  gens.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) gens.push_back(F2Vec::basis(n, n + i));
  return from_generators(n, gens, std::vector<uint8_t>(static_cast<size_t>(n), 0));
}

StabilizerState StabilizerState::from_generators(int n, std::span<const F2Vec> generators,
                                                 std::span<const uint8_t> signs) {
  if (generators.size() != static_cast<size_t>(n) || signs.size() != generators.size()) {
    throw param_error("a stabilizer state needs exactly n generators with n signs");
  }
  std::vector<std::pair<uint64_t, uint8_t>> rows;
  rows.reserve(generators.size());
  for (size_t i = 0; i < generators.size(); ++i) {
    require_same_n(generators[i].n(), n, "stabilizer construction");
    rows.emplace_back(generators[i].bits(), signs[i] ? 1 : 0);
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      if (symp_words(rows[i].first, rows[j].first, n) != 0) {
        throw param_error("stabilizer generators must pairwise commute");
      }
    }
  }

  // Sign-tracked reduced echelon form, pivots by ascending bit position. Row
  // combinations multiply the group elements, so signs pick up the real Weyl
  // product phase.
  size_t rank = 0;
  for (int col = 0; col < 2 * n && rank < rows.size(); ++col) {
    uint64_t colbit = 1ULL << col;
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot].first & colbit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i].first & colbit)) {
        rows[i].second = combine_signs(rows[i].first, rows[i].second, rows[rank].first,
                                       rows[rank].second, n);
        rows[i].first ^= rows[rank].first;
      }
    }
    ++rank;
  }
  if (rank != static_cast<size_t>(n)) {
    throw param_error("stabilizer generators must be linearly independent");
  }

  std::vector<F2Vec> gens;
  std::vector<uint8_t> out_signs;
  gens.reserve(rows.size());
  out_signs.reserve(rows.size());
  for (const auto& [word, sign] : rows) {
    gens.push_back(F2Vec(n, word));
    out_signs.push_back(sign);
  }
  return StabilizerState(n, std::move(gens), std::move(out_signs));
}

Subspace StabilizerState::group() const {
  std::vector<uint64_t> words;
  words.reserve(gens_.size());
  for (const auto& g : gens_) words.push_back(g.bits());
  return Subspace::span_words(n_, words);
}

StabilizerState apply_clifford(const CliffordTableau& c, const StabilizerState& phi) {
  require_same_n(c.n(), phi.n(), "stabilizer conjugation");
  std::vector<F2Vec> gens;
  std::vector<uint8_t> signs;
  gens.reserve(phi.generators().size());
  signs.reserve(phi.generators().size());
  for (size_t i = 0; i < phi.generators().size(); ++i) {
    SignedWeyl sw = conjugate_weyl(c, phi.generators()[i]);
    gens.push_back(sw.vec);
    signs.push_back(static_cast<uint8_t>(phi.signs()[i] ^ (sw.sign < 0)));
  }
  return StabilizerState::from_generators(phi.n(), gens, signs);
}

double basis_state_probability(const StabilizerState& phi, uint64_t b) {
  int n = phi.n();
  if (b >> n) throw param_error("basis index must fit in n bits");
  std::vector<std::pair<uint64_t, uint8_t>> rows;
  rows.reserve(phi.generators().size());
  for (size_t i = 0; i < phi.generators().size(); ++i) {
    rows.emplace_back(phi.generators()[i].bits(), phi.signs()[i]);
  }
  // Eliminate the X-part columns; whatever survives with an empty X-part is a
  // Z-type group element whose sign must match the basis character at b.
  size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    uint64_t colbit = 1ULL << col;
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot].first & colbit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i].first & colbit)) {
        rows[i].second = combine_signs(rows[i].first, rows[i].second, rows[rank].first,
                                       rows[rank].second, n);
        rows[i].first ^= rows[rank].first;
      }
    }
    ++rank;
  }
  int dz = n - static_cast<int>(rank);
  for (size_t i = rank; i < rows.size(); ++i) {
    uint64_t z = rows[i].first >> n;
    if ((rows[i].second ^ (std::popcount(z & b) & 1)) != 0) return 0.0;
  }
  return std::ldexp(1.0, dz - n);
}

PureState stabilizer_to_dense(const StabilizerState& phi, const Caps& caps) {
  int n = phi.n();
  if (n > caps.max_state_qubits) {
    throw cap_error("dense stabilizer reconstruction at n = " + std::to_string(n) +
                    " exceeds max_state_qubits = " + std::to_string(caps.max_state_qubits) +
                    "; raise the cap if 2^n amplitudes are affordable");
  }
  uint64_t dim = 1ULL << n;
  uint64_t seed_basis = dim;
  for (uint64_t b = 0; b < dim; ++b) {
    if (basis_state_probability(phi, b) > 0) {
      seed_basis = b;
      break;
    }
  }
  if (seed_basis == dim) {
    throw std::logic_error("stabilizer sign character admits no basis support");
  }

  std::vector<cplx> amps(dim, cplx(0, 0));
  amps[seed_basis] = cplx(1, 0);
  for (size_t i = 0; i < phi.generators().size(); ++i) {
    amps = project_signed_weyl(amps, phi.generators()[i].bits(), phi.signs()[i], n);
  }
  double norm2 = 0;
  for (const auto& a : amps) norm2 += std::norm(a);
  if (norm2 < std::ldexp(1.0, -n) * 0.5) {
    throw std::logic_error("projected seed lost its mass; sign character inconsistent");
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  PureState out = PureState::from_amplitudes(n, std::move(amps), caps);
  out.canonicalize_phase();
  return out;
}

double stabilizer_overlap(const StabilizerState& phi, const PureState& psi, const Caps& caps) {
  require_same_n(phi.n(), psi.n(), "overlap");
  int n = phi.n();
  if (n > 12) return fidelity(stabilizer_to_dense(phi, caps), psi);

  // Gray-code walk over the group, tracking each element's real sign.
  double acc = 0;
  uint64_t word = 0;
  int iphase = 0;
  uint64_t count = 1ULL << n;
  acc += weyl_expectation(psi, F2Vec::zero(n));
  for (uint64_t idx = 1; idx < count; ++idx) {
    int k = std::countr_zero(idx);
    const uint64_t g = phi.generators()[static_cast<size_t>(k)].bits();
    iphase = (iphase + 2 * phi.signs()[static_cast<size_t>(k)] +
              weyl_product_phase(n, word, g)) & 3;
    word ^= g;
    if (iphase & 1) throw std::logic_error("group element with imaginary sign");
    double e = weyl_expectation(psi, F2Vec(n, word));
    acc += (iphase == 0) ? e : -e;
  }
  double value = std::ldexp(acc, -n);
  return value < 0 ? 0.0 : (value > 1 ? 1.0 : value);
}

std::vector<StabilizerState> enumerate_stabilizer_states_for_group(const Subspace& s) {
  if (!is_lagrangian(s)) {
    throw param_error("state enumeration requires a Lagrangian subspace (isotropic, dim n)");
  }
  int n = s.n();
  if (n > Caps{}.max_enum_dim) {
    throw cap_error("enumerating 2^" + std::to_string(n) +
                    " signed states is over the enumeration budget");
  }
  std::vector<F2Vec> gens = s.basis();
  std::vector<StabilizerState> out;
  out.reserve(1ULL << n);
  std::vector<uint8_t> signs(static_cast<size_t>(n));
  for (uint64_t counter = 0; counter < (1ULL << n); ++counter) {
    for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = (counter >> i) & 1;
    out.push_back(StabilizerState::from_generators(n, gens, signs));
  }
  return out;
}

Subspace unsigned_stabilizer_group(const PureState& psi, double tol, const Caps& caps) {
  if (tol <= 0 || tol >= 1) throw param_error("tolerance must satisfy 0 < tol < 1");
  auto p = char_distribution(psi, caps);
  int n = psi.n();
  double threshold = (1.0 - tol) * (1.0 - tol) * std::ldexp(1.0, -n);
  std::vector<uint64_t> words;
  for (uint64_t x = 0; x < p.size(); ++x) {
    if (p[x] >= threshold) words.push_back(x);
  }
  Subspace span = Subspace::span_words(n, words);
  if (!is_isotropic(span)) {
    throw std::logic_error("near-unit Weyl expectations spanned a non-isotropic set");
  }
  return span;
}

int stabilizer_dimension(const PureState& psi, const Caps& caps) {
  return unsigned_stabilizer_group(psi, 1e-6, caps).dim();
}

PureState apply_clifford_dense(const CliffordTableau& c, const PureState& psi,
                               const Caps& caps) {
  require_same_n(c.n(), psi.n(), "dense tableau action");
  int n = c.n();
  std::vector<F2Vec> zgens;
  std::vector<uint8_t> zsigns;
  zgens.reserve(static_cast<size_t>(n));
  zsigns.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    zgens.push_back(c.image(n + i));
    zsigns.push_back(static_cast<uint8_t>(c.phase_bit(n + i)));
  }
  PureState chi = stabilizer_to_dense(StabilizerState::from_generators(n, zgens, zsigns), caps);

  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  uint64_t dim = psi.dimension();
  std::vector<cplx> out(dim, cplx(0, 0));
  for (uint64_t v = 0; v < dim; ++v) {
    cplx weight = psi.amplitude(v);
    if (weight == cplx(0, 0)) continue;
    SignedWeyl sw = conjugate_weyl(c, F2Vec(n, v));
    uint64_t a = sw.vec.a_bits(), b = sw.vec.b_bits();
    cplx coef = weight * static_cast<double>(sw.sign) * kIPow[std::popcount(a & b) & 3];
    for (uint64_t u = 0; u < dim; ++u) {
      cplx t = chi.amplitude(u);
      out[u ^ a] += (std::popcount(b & u) & 1) ? -coef * t : coef * t;
    }
  }
  return PureState::from_amplitudes(n, std::move(out), caps);
}

CliffordTableau clifford_mapping_to_zero(const StabilizerState& phi) {
  int n = phi.n();
  // Solve for partners h_i with [g_j, h_i] = δ_ij via an augmented
  // elimination, then straighten the h-pairings with g-corrections.
  std::vector<uint64_t> main;
  std::vector<uint64_t> aug;
  main.reserve(static_cast<size_t>(n));
  aug.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    main.push_back(swap_halves(phi.generators()[static_cast<size_t>(j)].bits(), n));
    aug.push_back(1ULL << j);
  }
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < 2 * n && rank < main.size(); ++col) {
    uint64_t colbit = 1ULL << col;
    size_t pivot = rank;
    while (pivot < main.size() && !(main[pivot] & colbit)) ++pivot;
    if (pivot == main.size()) continue;
    std::swap(main[rank], main[pivot]);
    std::swap(aug[rank], aug[pivot]);
    for (size_t i = 0; i < main.size(); ++i) {
      if (i != rank && (main[i] & colbit)) {
        main[i] ^= main[rank];
        aug[i] ^= aug[rank];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != static_cast<size_t>(n)) {
    throw std::logic_error("stabilizer generators lost rank during completion");
  }

  std::vector<uint64_t> h(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    uint64_t w = 0;
    for (size_t k = 0; k < rank; ++k) {
      if (aug[k] & (1ULL << i)) w |= 1ULL << pivot_col[k];
    }
    h[static_cast<size_t>(i)] = w;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (symp_words(h[static_cast<size_t>(i)], h[static_cast<size_t>(j)], n)) {
        h[static_cast<size_t>(i)] ^= phi.generators()[static_cast<size_t>(j)].bits();
      }
    }
  }

  std::vector<uint64_t> rows(2 * static_cast<size_t>(n));
  std::vector<uint8_t> phase(2 * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<size_t>(i)] = h[static_cast<size_t>(i)];
    rows[static_cast<size_t>(n) + i] = phi.generators()[static_cast<size_t>(i)].bits();
    phase[static_cast<size_t>(n) + i] = phi.signs()[static_cast<size_t>(i)];
  }
  // This tableau sends |0^n⟩ to φ; its inverse therefore maps φ back while
  // the sign bits cancel against φ's generator signs.
  return inverse(tableau_from_rows(n, rows, phase));
}

}  // namespace stabkit
