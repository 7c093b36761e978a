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

#include "stabkit/shadows.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

// Conjugation action of one tableau on every label word, built by extending
// along lowest set bits. phase is the i-exponent, always even for valid input.
// Reusable: build() overwrites in place so a sample loop allocates once.
struct ConjTable {
  std::vector<uint64_t> word;
  std::vector<uint8_t> phase;

  void build(const CliffordTableau& c) {
    int n = c.n();
    size_t len = 1ULL << (2 * n);
    word.resize(len);
    phase.resize(len);
    word[0] = 0;
    phase[0] = 0;
    for (size_t x = 1; x < len; ++x) {
      int j = std::countr_zero(x);
      size_t rest = x & (x - 1);
      uint64_t ej = 1ULL << j;
      uint64_t img = c.image(j).bits();
      int k = static_cast<int>(phase[rest]) - weyl_product_phase(n, rest, ej) +
              2 * c.phase_bit(j) + weyl_product_phase(n, word[rest], img);
      word[x] = word[rest] ^ img;
      phase[x] = static_cast<uint8_t>(((k % 4) + 4) % 4);
    }
  }
};

}  // namespace

ShadowSet::ShadowSet(int n, std::vector<ShadowSample> samples, int batch_count)
    : n_(n), batch_count_(batch_count), samples_(std::move(samples)) {
  if (batch_count_ < 1) throw param_error("batch count must be positive");
  size_t keep = (samples_.size() / batch_count_) * batch_count_;
  if (keep == 0) throw param_error("need at least one sample per batch");
  samples_.erase(samples_.begin() + static_cast<ptrdiff_t>(keep), samples_.end());
  for (const auto& s : samples_) {
    if (s.clifford.n() != n_) throw param_error("sample width mismatch");
    if (s.outcome >> n_) throw param_error("outcome wider than n bits");
  }
}

ShadowSet collect_shadows(const PureState& psi, uint64_t m, RngStream& rng,
                          int batch_count, const Caps& caps) {
  if (m == 0) throw param_error("shadow collection needs at least one sample");
  int n = psi.n();
  std::vector<ShadowSample> samples;
  samples.reserve(m);
  for (uint64_t i = 0; i < m; ++i) {
    CliffordTableau u = random_clifford(n, rng);
    PureState rotated = apply_clifford_dense(u, psi, caps);
    double target = rng.next_double();
    double acc = 0;
    uint64_t outcome = rotated.dimension() - 1;
    for (uint64_t b = 0; b < rotated.dimension(); ++b) {
      acc += std::norm(rotated.amplitude(b));
      if (target < acc) {
        outcome = b;
        break;
      }
    }
    samples.push_back(ShadowSample{std::move(u), outcome});
  }
  return ShadowSet(n, std::move(samples), batch_count);
}

std::vector<double> per_sample_estimates(const ShadowSet& shadows,
                                         const StabilizerState& phi) {
  if (phi.n() != shadows.n()) throw param_error("state width mismatch");
  double boost = static_cast<double>(1ULL << shadows.n()) + 1.0;
  std::vector<double> out;
  out.reserve(shadows.size());
  for (const auto& s : shadows.samples()) {
    double p = basis_state_probability(apply_clifford(s.clifford, phi), s.outcome);
    out.push_back(boost * p - 1.0);
  }
  return out;
}

double estimate_stabilizer_fidelity(const ShadowSet& shadows, const StabilizerState& phi) {
  auto per = per_sample_estimates(shadows, phi);
  size_t bs = shadows.batch_size();
  std::vector<double> means(shadows.batch_count());
  for (int b = 0; b < shadows.batch_count(); ++b) {
    double sum = 0;
    for (size_t i = 0; i < bs; ++i) sum += per[b * bs + i];
    means[b] = sum / static_cast<double>(bs);
  }
  return median(std::move(means));
}

namespace {

// Adds the hit weight to every sign slot satisfying the RREF system
// lambda . s = rhs: solve for the particular solution on the pivot bits, then
// walk the kernel coset in Gray order. Bit 63 of crhs_pivot carries the rhs.
void accumulate_hits(double* slot, int n, int ncon, const uint64_t* cmask,
                     const uint64_t* crhs_pivot, uint64_t low_mask, double hit_value) {
  uint64_t pivots = 0;
  uint64_t particular = 0;
  for (int c = 0; c < ncon; ++c) {
    if (crhs_pivot[c] >> 63) particular |= crhs_pivot[c] & low_mask;
    pivots |= crhs_pivot[c] & low_mask;
  }

  // Kernel basis: one free direction per non-pivot bit.
  uint64_t kernel[64];
  int kdim = 0;
  for (int f = 0; f < n; ++f) {
    if ((pivots >> f) & 1) continue;
    uint64_t vec = 1ULL << f;
    for (int c = 0; c < ncon; ++c) {
      if ((cmask[c] >> f) & 1) vec |= crhs_pivot[c] & low_mask;
    }
    kernel[kdim++] = vec;
  }

  double v = hit_value * static_cast<double>(1ULL << ncon);
  uint64_t s = particular;
  slot[s] += v;
  for (uint64_t t = 1; t < (1ULL << kdim); ++t) {
    s ^= kernel[std::countr_zero(t)];
    slot[s] += v;
  }
}

}  // namespace

std::vector<std::vector<double>> estimate_sign_families(const ShadowSet& shadows,
                                                        std::span<const Subspace> groups) {
  int n = shadows.n();
  for (const auto& g : groups) {
    if (g.n() != n) throw param_error("group width mismatch");
    if (!is_lagrangian(g)) throw param_error("sign families need a Lagrangian group");
  }
  int bc = shadows.batch_count();
  size_t bs = shadows.batch_size();
  uint64_t states = 1ULL << n;
  uint64_t low_mask = states - 1;
  double hit_value = std::ldexp(static_cast<double>(states) + 1.0, -n);

  // acc[g][batch << n | s] collects the hit part of the estimator; the
  // constant -1 every sample contributes and the constraint-free hits counted
  // in `uniform` are folded in at the end.
  std::vector<std::vector<double>> acc(groups.size());
  for (auto& a : acc) a.assign(static_cast<size_t>(bc) << n, 0.0);
  std::vector<uint64_t> uniform(groups.size() * static_cast<size_t>(bc), 0);

  // Whether a per-sample full conjugation table beats direct per-generator
  // conjugation; both paths compute identical values.
  size_t lookups = groups.size() * static_cast<size_t>(n);
  bool tabulate = 2 * n <= 24 && (1ULL << (2 * n)) <= 8 * lookups;

  // RREF constraint rows over the sign vector; at most n are independent.
  std::vector<uint64_t> cmask(n), crhs_pivot(n);

  if (tabulate) {
    // Member tables per group: the label and the i-exponent of the ordered
    // generator product for every member, indexed by its coordinate vector
    // over rows(). Scanning members against the conjugation table replaces
    // the per-sample generator elimination, and most samples leave the
    // diagonal subgroup trivial, which short-circuits into one counter bump.
    std::vector<std::vector<uint64_t>> elem_word(groups.size());
    std::vector<std::vector<uint8_t>> elem_base(groups.size());
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      const auto& rows = groups[gi].rows();
      auto& words = elem_word[gi];
      auto& bases = elem_base[gi];
      words.resize(states);
      bases.resize(states);
      words[0] = 0;
      bases[0] = 0;
      for (uint64_t c = 1; c < states; ++c) {
        int j = std::countr_zero(c);
        uint64_t rest = c & (c - 1);
        words[c] = words[rest] ^ rows[j];
        bases[c] = static_cast<uint8_t>(
            (bases[rest] + weyl_product_phase(n, rows[j], words[rest])) & 3);
      }
    }

    ConjTable table;
    for (size_t idx = 0; idx < static_cast<size_t>(bc) * bs; ++idx) {
      const ShadowSample& sample = shadows.samples()[idx];
      size_t batch = idx / bs;
      table.build(sample.clifford);

      for (size_t gi = 0; gi < groups.size(); ++gi) {
        const uint64_t* words = elem_word[gi].data();
        const uint8_t* bases = elem_base[gi].data();
        int ncon = 0;
        for (uint64_t c = 1; c < states; ++c) {
          const uint64_t img = table.word[words[c]];
          if (img & low_mask) continue;  // image off the diagonal, no constraint
          const int ph = (bases[c] + table.phase[words[c]]) & 3;
          if (ph & 1) throw std::logic_error("odd phase on a diagonal subgroup element");
          uint64_t m = c;
          uint64_t rhs = static_cast<uint64_t>(
              (ph >> 1) ^ (std::popcount(sample.outcome & (img >> n)) & 1));
          for (int ci = 0; ci < ncon; ++ci) {
            if ((m >> std::countr_zero(crhs_pivot[ci])) & 1) {
              m ^= cmask[ci];
              rhs ^= crhs_pivot[ci] >> 63;
            }
          }
          if (m == 0) {
            // Dependent member; the group product structure forces agreement.
            if (rhs) throw std::logic_error("inconsistent dependent sign constraint");
            continue;
          }
          int pb = std::countr_zero(m);
          for (int ci = 0; ci < ncon; ++ci) {
            if ((cmask[ci] >> pb) & 1) {
              cmask[ci] ^= m;
              crhs_pivot[ci] ^= rhs << 63;
            }
          }
          cmask[ncon] = m;
          crhs_pivot[ncon] = (1ULL << pb) | (rhs << 63);
          ++ncon;
        }

        if (ncon == 0) {
          ++uniform[gi * static_cast<size_t>(bc) + batch];
          continue;
        }
        accumulate_hits(acc[gi].data() + (batch << n), n, ncon, cmask.data(),
                        crhs_pivot.data(), low_mask, hit_value);
      }
    }
  } else {
    // Scratch rows: conjugated generator word, i-exponent, combination mask.
    std::vector<uint64_t> w(n), lam(n);
    std::vector<int> k(n);

    for (size_t idx = 0; idx < static_cast<size_t>(bc) * bs; ++idx) {
      const ShadowSample& sample = shadows.samples()[idx];
      size_t batch = idx / bs;

      for (size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& rows = groups[gi].rows();
        for (int i = 0; i < n; ++i) {
          SignedWeyl sw = conjugate_weyl(sample.clifford, F2Vec(n, rows[i]));
          w[i] = sw.vec.bits();
          k[i] = sw.sign == 1 ? 0 : 2;
          lam[i] = 1ULL << i;
        }

        // Gaussian elimination on the flip half; surviving all-Z rows generate
        // the diagonal subgroup whose characters decide P(outcome).
        int head = 0;
        for (int col = 0; col < n && head < n; ++col) {
          int pivot = -1;
          for (int r = head; r < n; ++r) {
            if ((w[r] >> col) & 1) {
              pivot = r;
              break;
            }
          }
          if (pivot < 0) continue;
          std::swap(w[head], w[pivot]);
          std::swap(k[head], k[pivot]);
          std::swap(lam[head], lam[pivot]);
          for (int r = 0; r < n; ++r) {
            if (r == head || !((w[r] >> col) & 1)) continue;
            k[r] += k[head] + weyl_product_phase(n, w[r], w[head]);
            w[r] ^= w[head];
            lam[r] ^= lam[head];
          }
          ++head;
        }

        // Z rows sit at indices head..n-1. Build the RREF constraint system
        // lambda . s = rhs over the sign vector s; the rows are independent.
        int ncon = 0;
        for (int r = head; r < n; ++r) {
          int kk = ((k[r] % 4) + 4) % 4;
          if (kk & 1) throw std::logic_error("odd phase on a diagonal subgroup generator");
          uint64_t m = lam[r];
          uint64_t rhs = static_cast<uint64_t>(
              (kk >> 1) ^ (std::popcount(sample.outcome & (w[r] >> n)) & 1));
          for (int c = 0; c < ncon; ++c) {
            if ((m >> std::countr_zero(crhs_pivot[c])) & 1) {
              m ^= cmask[c];
              rhs ^= crhs_pivot[c] >> 63;
            }
          }
          int pb = std::countr_zero(m);
          for (int c = 0; c < ncon; ++c) {
            if ((cmask[c] >> pb) & 1) {
              cmask[c] ^= m;
              crhs_pivot[c] ^= rhs << 63;
            }
          }
          cmask[ncon] = m;
          crhs_pivot[ncon] = (1ULL << pb) | (rhs << 63);
          ++ncon;
        }

        if (ncon == 0) {
          ++uniform[gi * static_cast<size_t>(bc) + batch];
          continue;
        }
        accumulate_hits(acc[gi].data() + (batch << n), n, ncon, cmask.data(),
                        crhs_pivot.data(), low_mask, hit_value);
      }
    }
  }

  std::vector<std::vector<double>> out(groups.size());
  std::vector<double> means(bc);
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    out[gi].resize(states);
    for (uint64_t s = 0; s < states; ++s) {
      for (int b = 0; b < bc; ++b) {
        double hits = acc[gi][(static_cast<size_t>(b) << n) | s] +
                      static_cast<double>(uniform[gi * static_cast<size_t>(bc) + b]) * hit_value;
        means[b] = hits / static_cast<double>(bs) - 1.0;
      }
      out[gi][s] = median(means);
    }
  }
  return out;
}

}  // namespace stabkit
