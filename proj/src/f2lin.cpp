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

#include "stabkit/f2lin.hpp"

#include <algorithm>

namespace stabkit {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxF2Qubits) {
    throw param_error("qubit count must satisfy 1 <= n <= " +
                      std::to_string(kMaxF2Qubits) + " (got " + std::to_string(n) + ")");
  }
}

// In-place reduced row echelon form over F2, columns scanned low bit first.
// Returns the rank; rows beyond it are zeroed.
int rref(std::vector<uint64_t>& rows, int width) {
  int rank = 0;
  for (int col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
    uint64_t colbit = 1ULL << col;
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i] & colbit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && (rows[i] & colbit)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

}  // namespace

F2Vec::F2Vec(int n, uint64_t bits) : bits_(bits), n_(n) {
  check_n(n);
  if (bits & ~low_mask(2 * n)) {
    throw param_error("phase-space word has bits above position 2n-1");
  }
}

F2Vec F2Vec::from_parts(int n, uint64_t a, uint64_t b) {
  check_n(n);
  if ((a | b) & ~low_mask(n)) {
    throw param_error("a/b parts must fit in n bits");
  }
  return F2Vec(n, a | (b << n));
}

F2Vec F2Vec::basis(int n, int j) {
  check_n(n);
  if (j < 0 || j >= 2 * n) {
    throw param_error("basis index must satisfy 0 <= j < 2n");
  }
  return F2Vec(n, 1ULL << j);
}

F2Vec F2Vec::from_string(std::string_view text) {
  if (text.size() % 2 != 0 || text.empty()) {
    throw param_error("phase-space text form must have even positive length 2n");
  }
  int n = static_cast<int>(text.size() / 2);
  check_n(n);
  uint64_t bits = 0;
  for (size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1') {
      bits |= 1ULL << j;
    } else if (text[j] != '0') {
      throw param_error("phase-space text form must be over {0,1}");
    }
  }
  return F2Vec(n, bits);
}

std::string F2Vec::to_string() const {
  std::string out(2 * static_cast<size_t>(n_), '0');
  for (int j = 0; j < 2 * n_; ++j) {
    if (bit(j)) out[j] = '1';
  }
  return out;
}

F2Vec& F2Vec::operator^=(const F2Vec& o) {
  if (n_ != o.n_) throw param_error("phase-space vectors must share n");
  bits_ ^= o.bits_;
  return *this;
}

bool lex_less(const F2Vec& x, const F2Vec& y) {
  if (x.n() != y.n()) return x.n() < y.n();
  for (int j = 0; j < 2 * x.n(); ++j) {
    if (x.bit(j) != y.bit(j)) return !x.bit(j);
  }
  return false;
}

bool lex_less_rows(std::span<const uint64_t> a, std::span<const uint64_t> b, int n) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return lex_less(F2Vec(n, a[i]), F2Vec(n, b[i]));
  }
  return a.size() < b.size();
}

Subspace Subspace::zero(int n) {
  check_n(n);
  return Subspace(n, {});
}

Subspace Subspace::span(int n, std::span<const F2Vec> vectors) {
  check_n(n);
  std::vector<uint64_t> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.n() != n) throw param_error("span vectors must share n");
    rows.push_back(v.bits());
  }
  rref(rows, 2 * n);
  return Subspace(n, std::move(rows));
}

Subspace Subspace::span_words(int n, std::span<const uint64_t> words) {
  check_n(n);
  std::vector<uint64_t> rows(words.begin(), words.end());
  for (uint64_t w : rows) {
    if (w & ~low_mask(2 * n)) throw param_error("span words must fit in 2n bits");
  }
  rref(rows, 2 * n);
  return Subspace(n, std::move(rows));
}

std::vector<F2Vec> Subspace::basis() const {
  std::vector<F2Vec> out;
  out.reserve(rows_.size());
  for (uint64_t w : rows_) out.emplace_back(n_, w);
  return out;
}

bool Subspace::contains(const F2Vec& x) const {
  if (x.n() != n_) throw param_error("membership test requires matching n");
  uint64_t r = x.bits();
  for (uint64_t row : rows_) {
    uint64_t pivot = row & (~row + 1);  // lowest set bit == pivot column
    if (r & pivot) r ^= row;
  }
  return r == 0;
}

Subspace kernel_of_constraints(int n, std::span<const uint64_t> constraints) {
  check_n(n);
  int width = 2 * n;
  std::vector<uint64_t> rows(constraints.begin(), constraints.end());
  rref(rows, width);

  // Pivot columns are determined; every free column contributes one kernel
  // basis vector with x_free = 1 and pivots back-substituted.
  std::vector<int> pivot_col(rows.size());
  uint64_t pivot_mask = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    pivot_col[i] = std::countr_zero(rows[i]);
    pivot_mask |= 1ULL << pivot_col[i];
  }
  std::vector<uint64_t> kernel;
  for (int f = 0; f < width; ++f) {
    if (pivot_mask & (1ULL << f)) continue;
    uint64_t v = 1ULL << f;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] & (1ULL << f)) v |= 1ULL << pivot_col[i];
    }
    kernel.push_back(v);
  }
  return Subspace::span_words(n, kernel);
}

Subspace symplectic_complement(const Subspace& t) {
  // [b_i, x] = 0 for basis b_i is the dot-product constraint swap(b_i) . x = 0.
  std::vector<uint64_t> constraints;
  constraints.reserve(t.rows().size());
  for (uint64_t row : t.rows()) constraints.push_back(swap_halves(row, t.n()));
  return kernel_of_constraints(t.n(), constraints);
}

bool is_isotropic(const Subspace& t) {
  const auto b = t.basis();
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) {
      if (symplectic_product(b[i], b[j]) != 0) return false;
    }
  }
  return true;
}

bool is_lagrangian(const Subspace& t) { return t.dim() == t.n() && is_isotropic(t); }

SubspaceElements::iterator::iterator(const Subspace* s, uint64_t index)
    : subspace_(s), index_(index), current_(F2Vec::zero(s->n())) {}

SubspaceElements::iterator& SubspaceElements::iterator::operator++() {
  ++index_;
  uint64_t count = 1ULL << subspace_->dim();
  if (index_ < count) {
    // Gray-code step: index i -> i+1 toggles basis vector ctz(i+1).
    int j = std::countr_zero(index_);
    current_ ^= F2Vec(subspace_->n(), subspace_->rows()[j]);
  }
  return *this;
}

SubspaceElements::iterator SubspaceElements::end() const {
  return iterator(subspace_, 1ULL << subspace_->dim());
}

SubspaceElements enumerate_elements(const Subspace& t, int max_dim) {
  if (t.dim() > max_dim) {
    throw cap_error("subspace dimension " + std::to_string(t.dim()) +
                    " exceeds the enumeration cap " + std::to_string(max_dim) +
                    "; raise max_enum_dim only if 2^dim elements are affordable");
  }
  return SubspaceElements(t);
}

}  // namespace stabkit
