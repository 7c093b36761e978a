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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabkit/caps.hpp"
#include "stabkit/errors.hpp"

namespace stabkit {

// Mask with the low 'count' bits set; count <= 64.
inline uint64_t low_mask(int count) {
  return count >= 64 ? ~0ULL : ((1ULL << count) - 1);
}

// Exchange the two n-bit halves of a packed phase-space word.
inline uint64_t swap_halves(uint64_t bits, int n) {
  return ((bits >> n) | (bits << n)) & low_mask(2 * n);
}

// A vector in F2^{2n}. Word layout: bit q holds the a-part (X exponent) for
// qubit q, bit n+q the b-part (Z exponent). Text form is the a-part then the
// b-part, qubit 0 leftmost in each half.
class F2Vec {
 public:
  F2Vec() = default;
  F2Vec(int n, uint64_t bits);
  static F2Vec zero(int n) { return F2Vec(n, 0); }
  static F2Vec from_parts(int n, uint64_t a, uint64_t b);
  // Standard basis vector e_j: j < n are X rows, j >= n are Z rows.
  static F2Vec basis(int n, int j);
  static F2Vec from_string(std::string_view text);

  int n() const { return n_; }
  uint64_t bits() const { return bits_; }
  uint64_t a_bits() const { return bits_ & low_mask(n_); }
  uint64_t b_bits() const { return bits_ >> n_; }
  bool bit(int j) const { return (bits_ >> j) & 1; }
  bool is_zero() const { return bits_ == 0; }
  std::string to_string() const;

  F2Vec& operator^=(const F2Vec& o);
  friend F2Vec operator^(F2Vec x, const F2Vec& y) { return x ^= y; }
  friend bool operator==(const F2Vec& x, const F2Vec& y) {
    return x.n_ == y.n_ && x.bits_ == y.bits_;
  }

 private:
  uint64_t bits_ = 0;
  int n_ = 0;
};

// Order matching the text form (qubit 0's a-bit is the most significant
// position). Used wherever a deterministic vertex or witness order is needed.
bool lex_less(const F2Vec& x, const F2Vec& y);

// The same order extended elementwise to generator row lists.
bool lex_less_rows(std::span<const uint64_t> a, std::span<const uint64_t> b, int n);

// [x, y] = x_a . y_b + x_b . y_a over F2. Zero exactly when the corresponding
// phase-space operators commute.
inline int symplectic_product(const F2Vec& x, const F2Vec& y) {
  return static_cast<int>(std::popcount(x.bits() & swap_halves(y.bits(), y.n())) & 1ULL);
}

// Subspace of F2^{2n} held in reduced row echelon form with columns scanned
// in text order. The RREF basis is a canonical representative: two subspaces
// are equal iff their row lists are byte-identical.
class Subspace {
 public:
  static Subspace zero(int n);
  static Subspace span(int n, std::span<const F2Vec> vectors);
  static Subspace span_words(int n, std::span<const uint64_t> words);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<uint64_t>& rows() const { return rows_; }
  std::vector<F2Vec> basis() const;
  bool contains(const F2Vec& x) const;

  friend bool operator==(const Subspace& s, const Subspace& t) {
    return s.n_ == t.n_ && s.rows_ == t.rows_;
  }

 private:
  Subspace(int n, std::vector<uint64_t> rows) : n_(n), rows_(std::move(rows)) {}
  int n_ = 0;
  std::vector<uint64_t> rows_;  // RREF, ascending pivot column
};

// T-perp = {x : [t, x] = 0 for all t in T}; dim T + dim T-perp = 2n.
Subspace symplectic_complement(const Subspace& t);

// Every pair of elements has zero symplectic product.
bool is_isotropic(const Subspace& t);

// Isotropic of the maximal dimension n.
bool is_lagrangian(const Subspace& t);

// Range over all 2^dim elements, starting at zero, each exactly once
// (Gray-code steps: one basis vector toggled per increment).
class SubspaceElements {
 public:
  class iterator {
   public:
    iterator(const Subspace* s, uint64_t index);
    const F2Vec& operator*() const { return current_; }
    iterator& operator++();
    bool operator!=(const iterator& o) const { return index_ != o.index_; }

   private:
    const Subspace* subspace_;
    uint64_t index_;
    F2Vec current_;
  };

  explicit SubspaceElements(const Subspace& s) : subspace_(&s) {}
  iterator begin() const { return iterator(subspace_, 0); }
  iterator end() const;

 private:
  const Subspace* subspace_;
};

SubspaceElements enumerate_elements(const Subspace& t, int max_dim = Caps{}.max_enum_dim);

// Kernel of the linear map x -> (c . x mod 2 for each constraint word c),
// as an RREF subspace of F2^{2n}.
Subspace kernel_of_constraints(int n, std::span<const uint64_t> constraints);

}  // namespace stabkit
