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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "stabkit/cliques.hpp"
#include "stabkit/oracle.hpp"
#include "stabkit/sampling.hpp"
#include "stabkit/states.hpp"

using namespace stabkit;

TEST_CASE("graph build: dedup, zero drop, vertex order") {
  std::vector<F2Vec> same(7, F2Vec::from_string("0110"));
  auto g1 = build_comm_graph(2, same);
  CHECK(g1.size() == 1);
  CHECK(maximal_cliques(g1) == std::vector<std::vector<int>>{{0}});

  std::vector<F2Vec> mixed{F2Vec::zero(2), F2Vec::from_string("1000"),
                           F2Vec::from_string("0100"), F2Vec::from_string("1000"),
                           F2Vec::zero(2)};
  auto g2 = build_comm_graph(2, mixed);
  REQUIRE(g2.size() == 2);
  CHECK(g2.vertices()[0] == F2Vec::from_string("0100"));
  CHECK(g2.vertices()[1] == F2Vec::from_string("1000"));
  CHECK(g2.adjacent(0, 1));
}

TEST_CASE("anticommuting labels stay disconnected") {
  std::vector<F2Vec> xz{F2Vec::from_string("10"), F2Vec::from_string("01")};
  auto g = build_comm_graph(1, xz);
  REQUIRE(g.size() == 2);
  CHECK(!g.adjacent(0, 1));
  CHECK(maximal_cliques(g) == std::vector<std::vector<int>>{{0}, {1}});

  // X, Y, Z pairwise anticommute: three singleton cliques.
  std::vector<F2Vec> xyz{F2Vec::from_string("10"), F2Vec::from_string("01"),
                         F2Vec::from_string("11")};
  auto g3 = build_comm_graph(1, xyz);
  CHECK(maximal_cliques(g3) == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("triangle of commuting labels is one clique") {
  std::vector<F2Vec> zs{F2Vec::from_string("0010"), F2Vec::from_string("0001"),
                        F2Vec::from_string("0011")};
  auto g = build_comm_graph(2, zs);
  CHECK(maximal_cliques(g) == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("samples from a basis state span a complete graph") {
  auto zero = PureState::zero_state(3);
  BellSampler sampler(zero, SampleMode::Exact, {});
  RngStream rng(70);
  std::vector<F2Vec> samples;
  for (int i = 0; i < 60; ++i) samples.push_back(sampler.sample(rng));

  auto g = build_comm_graph(3, samples);
  REQUIRE(g.size() >= 2);
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i + 1; j < g.size(); ++j) CHECK(g.adjacent(i, j));
  }
  auto cliques = maximal_cliques(g);
  REQUIRE(cliques.size() == 1);
  CHECK(cliques[0].size() == g.size());
}

TEST_CASE("pivoted enumeration matches the subset-scan oracle") {
  RngStream rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    // Random subset of the 15 nonzero labels at n=2.
    std::vector<F2Vec> samples;
    for (uint64_t w = 1; w < 16; ++w) {
      if (rng.next_bool()) samples.push_back(F2Vec(2, w));
    }
    if (samples.empty()) samples.push_back(F2Vec(2, 1 + rng.next_below(15)));

    auto g = build_comm_graph(2, samples);
    auto fast = maximal_cliques(g);
    auto naive = naive_maximal_cliques(g);
    CHECK(fast == naive);

    // Clique count respects the 3^{v/3} + v bound.
    double cap = std::pow(3.0, g.size() / 3.0) + static_cast<double>(g.size());
    CHECK(static_cast<double>(fast.size()) <= cap);

    // Every clique spans an isotropic subspace.
    for (const auto& clique : fast) {
      std::vector<F2Vec> members;
      for (int idx : clique) members.push_back(g.vertices()[idx]);
      CHECK(is_isotropic(Subspace::span(2, members)));
    }
  }
}

TEST_CASE("full label set at n=3 finds every maximal isotropic group") {
  std::vector<F2Vec> all;
  for (uint64_t w = 1; w < 64; ++w) all.push_back(F2Vec(3, w));
  auto g = build_comm_graph(3, all);
  REQUIRE(g.size() == 63);

  CHECK_THROWS_AS(maximal_cliques(g), cap_error);

  auto cliques = maximal_cliques(g, 64);
  // Lagrangian count at n=3: (2^1+1)(2^2+1)(2^3+1).
  CHECK(cliques.size() == 135);
  for (const auto& clique : cliques) {
    CHECK(clique.size() == 7);
    std::vector<F2Vec> members;
    for (int idx : clique) members.push_back(g.vertices()[idx]);
    CHECK(is_lagrangian(Subspace::span(3, members)));
  }
}

TEST_CASE("identical inputs give identical clique lists") {
  RngStream rng(72);
  std::vector<F2Vec> samples;
  for (int i = 0; i < 40; ++i) samples.push_back(F2Vec(3, rng.next_below(64)));
  auto g1 = build_comm_graph(3, samples);
  auto g2 = build_comm_graph(3, samples);
  CHECK(g1.vertices() == g2.vertices());
  CHECK(maximal_cliques(g1, 64) == maximal_cliques(g2, 64));
}
