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

#include "stabkit/cliques.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

int popcount_words(const std::vector<uint64_t>& w) {
  int c = 0;
  for (uint64_t x : w) c += std::popcount(x);
  return c;
}

}  // namespace

CommGraph::CommGraph(int n, std::vector<F2Vec> vertices)
    : n_(n), vertices_(std::move(vertices)) {
  size_t v = vertices_.size();
  size_t words = (v + 63) / 64;
  rows_.assign(v, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < v; ++i) {
    for (size_t j = i + 1; j < v; ++j) {
      if (symplectic_product(vertices_[i], vertices_[j]) == 0) {
        rows_[i][j >> 6] |= 1ULL << (j & 63);
        rows_[j][i >> 6] |= 1ULL << (i & 63);
      }
    }
  }
}

CommGraph build_comm_graph(int n, std::span<const F2Vec> samples) {
  std::vector<F2Vec> vertices;
  vertices.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.n() != n) throw param_error("sample width mismatch in graph build");
    if (!s.is_zero()) vertices.push_back(s);
  }
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return CommGraph(n, std::move(vertices));
}

std::vector<std::vector<int>> maximal_cliques(const CommGraph& g, size_t max_vertices) {
  size_t v = g.size();
  if (v > max_vertices) {
    throw cap_error("comm graph has " + std::to_string(v) + " vertices, cap is " +
                    std::to_string(max_vertices) + "; raise the vertex cap or lower m");
  }
  std::vector<std::vector<int>> out;
  if (v == 0) return out;
  size_t words = (v + 63) / 64;

  std::vector<int> current;
  std::vector<uint64_t> scratch(words);

  // Bron-Kerbosch. cand holds vertices that extend the current clique, done
  // holds vertices already covered by an earlier branch; pivoting skips the
  // pivot's neighborhood to prune the branching.
  auto expand = [&](auto&& self, std::vector<uint64_t> cand,
                    std::vector<uint64_t> done) -> void {
    bool cand_empty = popcount_words(cand) == 0;
    if (cand_empty && popcount_words(done) == 0) {
      out.push_back(current);
      return;
    }
    if (cand_empty) return;

    int pivot = -1, best = -1;
    for (size_t w = 0; w < words; ++w) {
      uint64_t both = cand[w] | done[w];
      while (both) {
        int u = static_cast<int>((w << 6) + std::countr_zero(both));
        both &= both - 1;
        int gain = 0;
        for (size_t k = 0; k < words; ++k) gain += std::popcount(cand[k] & g.rows()[u][k]);
        if (gain > best) {
          best = gain;
          pivot = u;
        }
      }
    }

    for (size_t w = 0; w < words; ++w) scratch[w] = cand[w] & ~g.rows()[pivot][w];
    std::vector<uint64_t> branch = scratch;
    for (size_t w = 0; w < words; ++w) {
      while (branch[w]) {
        int u = static_cast<int>((w << 6) + std::countr_zero(branch[w]));
        branch[w] &= branch[w] - 1;

        std::vector<uint64_t> next_cand(words), next_done(words);
        for (size_t k = 0; k < words; ++k) {
          next_cand[k] = cand[k] & g.rows()[u][k];
          next_done[k] = done[k] & g.rows()[u][k];
        }
        current.push_back(u);
        self(self, std::move(next_cand), std::move(next_done));
        current.pop_back();

        cand[w] &= ~(1ULL << (u & 63));
        done[w] |= 1ULL << (u & 63);
      }
    }
  };

  std::vector<uint64_t> all(words, 0);
  for (size_t i = 0; i < v; ++i) all[i >> 6] |= 1ULL << (i & 63);
  expand(expand, std::move(all), std::vector<uint64_t>(words, 0));

  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stabkit
