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

#include "stabkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <set>
#include <string>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// i-exponent t in W_x W_y = i^t W_{x xor y}, spelled out from the letterwise
// products of the Hermitian Pauli letters.
int phase4(uint64_t x, uint64_t y, int n) {
  uint64_t ax = x & low_mask(n), bx = x >> n;
  uint64_t ay = y & low_mask(n), by = y >> n;
  int t = std::popcount(ax & bx) + std::popcount(ay & by) + 2 * std::popcount(bx & ay) +
          3 * std::popcount((ax ^ ay) & (bx ^ by));
  return t & 3;
}

// <psi| W_x |psi> from the matrix elements of W_x.
double raw_expectation(const PureState& psi, uint64_t word) {
  int n = psi.n();
  uint64_t a = word & low_mask(n), b = word >> n;
  cplx front = kIPow[std::popcount(a & b) & 3];
  cplx acc = 0;
  for (uint64_t v = 0; v < psi.dimension(); ++v) {
    cplx term = front * psi.amplitude(v);
    if (std::popcount(b & v) & 1) term = -term;
    acc += std::conj(psi.amplitude(v ^ a)) * term;
  }
  return acc.real();
}

std::vector<double> raw_char_table(const PureState& psi) {
  uint64_t len = 1ULL << (2 * psi.n());
  double scale = 1.0 / static_cast<double>(psi.dimension());
  std::vector<double> p(len);
  for (uint64_t x = 0; x < len; ++x) {
    double e = raw_expectation(psi, x);
    p[x] = e * e * scale;
  }
  return p;
}

// All Lagrangian subspaces by breadth-first isotropic extension.
std::vector<Subspace> all_lagrangians(int n) {
  std::set<std::vector<uint64_t>> frontier{{}};
  for (int d = 0; d < n; ++d) {
    std::set<std::vector<uint64_t>> next;
    for (const auto& rows : frontier) {
      Subspace s = Subspace::span_words(n, rows);
      for (uint64_t x = 1; x < (1ULL << (2 * n)); ++x) {
        if (s.contains(F2Vec(n, x))) continue;
        bool commutes = true;
        for (uint64_t r : rows) {
          if (std::popcount(x & swap_halves(r, n)) & 1) {
            commutes = false;
            break;
          }
        }
        if (!commutes) continue;
        auto grown = rows;
        grown.push_back(x);
        next.insert(Subspace::span_words(n, grown).rows());
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subspace> out;
  out.reserve(frontier.size());
  for (const auto& rows : frontier) out.push_back(Subspace::span_words(n, rows));
  std::sort(out.begin(), out.end(), [n](const Subspace& a, const Subspace& b) {
    return lex_less_rows(a.rows(), b.rows(), n);
  });
  return out;
}

}  // namespace

StabilizerCatalog::StabilizerCatalog(int n) : n_(n) {
  if (n < 1 || n > 3) throw cap_error("catalog is built for 1 to 3 qubits");
  uint64_t dim = 1ULL << n;

  for (const auto& group : all_lagrangians(n)) {
    const auto& rows = group.rows();

    // Group elements with the phase of the ascending generator product.
    std::vector<uint64_t> words(dim);
    std::vector<int> phases(dim);
    for (uint64_t t = 0; t < dim; ++t) {
      uint64_t w = 0;
      int k = 0;
      for (int i = 0; i < n; ++i) {
        if (!((t >> i) & 1)) continue;
        k += phase4(w, rows[i], n);
        w ^= rows[i];
      }
      words[t] = w;
      phases[t] = k & 3;
    }

    for (uint64_t signs = 0; signs < dim; ++signs) {
      // Rank-1 group average (1/2^n) sum sigma(x) W_x applied to the first
      // basis vector it does not annihilate.
      for (uint64_t seed = 0; seed < dim; ++seed) {
        std::vector<cplx> acc(dim, cplx{0, 0});
        for (uint64_t t = 0; t < dim; ++t) {
          int k = phases[t] + 2 * (std::popcount(t & signs) & 1);
          uint64_t a = words[t] & low_mask(n), b = words[t] >> n;
          cplx coeff = kIPow[(k + std::popcount(a & b)) & 3];
          if (std::popcount(b & seed) & 1) coeff = -coeff;
          acc[seed ^ a] += coeff;
        }
        double norm2 = 0;
        for (const cplx& z : acc) norm2 += std::norm(z);
        norm2 /= static_cast<double>(dim * dim);
        if (norm2 < 0.5 / static_cast<double>(dim)) continue;

        double inv = 1.0 / (static_cast<double>(dim) * std::sqrt(norm2));
        for (cplx& z : acc) z *= inv;
        PureState state = PureState::from_amplitudes(n, std::move(acc));
        state.canonicalize_phase();
        entries_.push_back(CatalogEntry{std::move(state), rows, signs});
        break;
      }
    }
  }
}

const StabilizerCatalog& stabilizer_catalog(int n) {
  switch (n) {
    case 1: {
      static const StabilizerCatalog c(1);
      return c;
    }
    case 2: {
      static const StabilizerCatalog c(2);
      return c;
    }
    case 3: {
      static const StabilizerCatalog c(3);
      return c;
    }
    default:
      throw cap_error("catalog is built for 1 to 3 qubits");
  }
}

std::pair<double, const CatalogEntry*> brute_force_stabilizer_fidelity(const PureState& psi) {
  const auto& catalog = stabilizer_catalog(psi.n());
  double best = -1;
  const CatalogEntry* witness = nullptr;
  for (const auto& entry : catalog.entries()) {
    cplx ip = 0;
    for (uint64_t v = 0; v < psi.dimension(); ++v) {
      ip += std::conj(entry.state.amplitude(v)) * psi.amplitude(v);
    }
    double overlap = std::norm(ip);
    if (overlap > best + 1e-15) {
      best = overlap;
      witness = &entry;
    }
  }
  return {best, witness};
}

WeylDistribution direct_weyl_distribution(const PureState& psi) {
  if (psi.n() > 4) throw cap_error("direct convolution is quadratic in 4^n; n <= 4");
  auto p = raw_char_table(psi);
  uint64_t len = p.size();
  std::vector<double> q(len, 0.0);
  for (uint64_t x = 0; x < len; ++x) {
    double acc = 0;
    for (uint64_t y = 0; y < len; ++y) acc += p[y] * p[x ^ y];
    q[x] = acc;
  }
  return WeylDistribution(psi.n(), std::move(q));
}

double exact_eta(const PureState& psi, const Caps& caps) {
  if (psi.n() > caps.max_dist_qubits) {
    throw cap_error("eta needs the full characteristic table; n exceeds cap");
  }
  auto p = raw_char_table(psi);
  double cubes = 0;
  for (double v : p) cubes += v * v * v;
  return std::ldexp(cubes, 2 * psi.n());
}

std::vector<std::vector<int>> naive_maximal_cliques(const CommGraph& g) {
  size_t v = g.size();
  if (v > 15) throw cap_error("naive clique scan enumerates 2^v subsets; v <= 15");
  std::vector<uint32_t> cliques;
  for (uint32_t set = 1; set < (1u << v); ++set) {
    bool ok = true;
    for (size_t i = 0; i < v && ok; ++i) {
      if (!((set >> i) & 1)) continue;
      for (size_t j = i + 1; j < v && ok; ++j) {
        if (((set >> j) & 1) && !g.adjacent(i, j)) ok = false;
      }
    }
    if (!ok) continue;
    bool maximal = true;
    for (size_t u = 0; u < v && maximal; ++u) {
      if ((set >> u) & 1) continue;
      bool extends = true;
      for (size_t i = 0; i < v && extends; ++i) {
        if (((set >> i) & 1) && !g.adjacent(u, i)) extends = false;
      }
      if (extends) maximal = false;
    }
    if (maximal) cliques.push_back(set);
  }
  std::vector<std::vector<int>> out;
  out.reserve(cliques.size());
  for (uint32_t set : cliques) {
    std::vector<int> members;
    for (size_t i = 0; i < v; ++i) {
      if ((set >> i) & 1) members.push_back(static_cast<int>(i));
    }
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stabkit
