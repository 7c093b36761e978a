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
#include <span>
#include <vector>

#include "stabkit/f2lin.hpp"

namespace stabkit {

// Undirected graph on distinct nonzero phase-space labels, with an edge
// exactly where the symplectic product vanishes. Vertices are stored in
// lexicographic text order; adjacency rows are bit masks over vertex indices.
class CommGraph {
 public:
  int n() const { return n_; }
  size_t size() const { return vertices_.size(); }
  const std::vector<F2Vec>& vertices() const { return vertices_; }
  const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }

  bool adjacent(size_t u, size_t v) const { return (rows_[u][v >> 6] >> (v & 63)) & 1; }

  friend CommGraph build_comm_graph(int n, std::span<const F2Vec> samples);

 private:
  CommGraph(int n, std::vector<F2Vec> vertices);
  int n_ = 0;
  std::vector<F2Vec> vertices_;
  std::vector<std::vector<uint64_t>> rows_;
};

// Deduplicates the samples, drops the zero label, sorts, and links commuting
// pairs. Duplicate labels never change any clique's span, so nothing is lost.
CommGraph build_comm_graph(int n, std::span<const F2Vec> samples);

// Every maximal clique exactly once, each as an ascending index list, the
// list of cliques in lexicographic order. Rejects graphs with more than
// max_vertices vertices; enumeration is Bron-Kerbosch with greedy pivoting.
std::vector<std::vector<int>> maximal_cliques(const CommGraph& g, size_t max_vertices = 60);

}  // namespace stabkit
