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
#include <cstdint>
#include <vector>

#include "stabkit/sampling.hpp"
#include "stabkit/stabilizer.hpp"
#include "stabkit/states.hpp"

using namespace stabkit;

namespace {

PureState make_t_state() {
  std::vector<Gate> gates{{Gate::Kind::H, 0}, {Gate::Kind::T, 0}};
  return from_circuit(1, gates);
}

// Output state of a Clifford scaffold with a single T inserted mid-circuit.
PureState doped_state(int n, RngStream& rng) {
  std::vector<Gate> gates;
  auto extend = [&](int count) {
    for (int i = 0; i < count; ++i) {
      if (rng.next_bool()) {
        gates.push_back({rng.next_bool() ? Gate::Kind::H : Gate::Kind::S,
                         static_cast<int>(rng.next_below(n))});
      } else {
        int a = static_cast<int>(rng.next_below(n));
        int b = static_cast<int>(rng.next_below(n - 1));
        if (b >= a) ++b;
        gates.push_back({Gate::Kind::CNOT, a, b});
      }
    }
  };
  extend(24);
  gates.push_back({Gate::Kind::T, static_cast<int>(rng.next_below(n))});
  extend(24);
  return from_circuit(n, gates);
}

}  // namespace

TEST_CASE("samples from a computational basis state carry no flip part") {
  auto zero = PureState::zero_state(3);
  RngStream rng(50);
  for (SampleMode mode : {SampleMode::Exact, SampleMode::Physical}) {
    BellSampler sampler(zero, mode, {});
    for (int i = 0; i < 200; ++i) {
      CHECK(sampler.sample(rng).a_bits() == 0);
    }
  }
}

TEST_CASE("exact sampling frequencies match the distribution table") {
  auto t = make_t_state();
  BellSampler sampler(t, SampleMode::Exact, {});
  RngStream rng(51);
  const int draws = 100000;
  std::vector<int> counts(4, 0);
  for (int i = 0; i < draws; ++i) ++counts[sampler.sample(rng).bits()];

  const double expect[4] = {3.0 / 8, 1.0 / 4, 1.0 / 8, 1.0 / 4};
  for (int w = 0; w < 4; ++w) {
    double freq = static_cast<double>(counts[w]) / draws;
    double sigma = std::sqrt(expect[w] * (1 - expect[w]) / draws);
    CHECK(std::abs(freq - expect[w]) < 3 * sigma);
  }
}

TEST_CASE("bell pair distribution convolves to the weyl distribution") {
  RngStream rng(52);
  std::vector<PureState> states;
  states.push_back(make_t_state());
  states.push_back(haar_random(2, rng));
  states.push_back(haar_random(3, rng));
  states.push_back(doped_state(3, rng));

  for (const auto& psi : states) {
    auto pair = bell_pair_distribution(psi);
    double total = 0;
    for (double v : pair) {
      CHECK(v >= 0.0);
      total += v;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

    auto q = weyl_distribution(psi);
    size_t len = pair.size();
    for (size_t x = 0; x < len; ++x) {
      double conv = 0;
      for (size_t y = 0; y < len; ++y) conv += pair[y] * pair[x ^ y];
      CHECK(std::abs(conv - q[x]) < 1e-9);
    }
  }
}

TEST_CASE("exact and physical modes agree in distribution") {
  RngStream rng(53);
  auto psi = haar_random(2, rng);
  BellSampler exact(psi, SampleMode::Exact, {});
  BellSampler physical(psi, SampleMode::Physical, {});

  const int draws = 100000;
  std::vector<int> ce(16, 0), cp(16, 0);
  for (int i = 0; i < draws; ++i) {
    ++ce[exact.sample(rng).bits()];
    ++cp[physical.sample(rng).bits()];
  }
  double tv = 0;
  for (int w = 0; w < 16; ++w) {
    tv += std::abs(ce[w] - cp[w]) / static_cast<double>(draws);
  }
  tv /= 2;
  CHECK(tv <= 0.02);
}

TEST_CASE("doped circuit samples stay symplectically orthogonal to the stabilizer group") {
  RngStream rng(54);
  auto psi = doped_state(4, rng);
  auto group = unsigned_stabilizer_group(psi);
  REQUIRE(group.dim() >= 2);

  BellSampler sampler(psi, SampleMode::Exact, {});
  for (int i = 0; i < 500; ++i) {
    F2Vec x = sampler.sample(rng);
    for (const auto& g : group.basis()) {
      CHECK(symplectic_product(x, g) == 0);
    }
  }
}

TEST_CASE("two copy weyl measurement statistics") {
  RngStream rng(55);

  // Stabilizer eigenvectors give deterministic single-copy outcomes, so the
  // product is +1 regardless of the eigenvalue's sign.
  auto one = PureState::basis_state(1, 1);
  for (int i = 0; i < 50; ++i) {
    CHECK(weyl_twocopy_measure(one, F2Vec::from_string("01"), rng) == 1);
  }
  std::vector<Gate> hgate{{Gate::Kind::H, 0}};
  auto plus = from_circuit(1, hgate);
  for (int i = 0; i < 50; ++i) {
    CHECK(weyl_twocopy_measure(plus, F2Vec::from_string("10"), rng) == 1);
  }

  const int draws = 10000;
  double mean = 0;
  for (int i = 0; i < draws; ++i) {
    mean += weyl_twocopy_measure(PureState::zero_state(1), F2Vec::from_string("10"), rng);
  }
  mean /= draws;
  CHECK(std::abs(mean) < 3.0 / std::sqrt(draws));

  auto t = make_t_state();
  mean = 0;
  for (int i = 0; i < draws; ++i) {
    mean += weyl_twocopy_measure(t, F2Vec::from_string("10"), rng);
  }
  mean /= draws;
  // Variance of a +-1 variable with mean 1/2 is 3/4.
  CHECK(std::abs(mean - 0.5) < 3 * std::sqrt(0.75 / draws));
}

TEST_CASE("sampled eta statistic tracks the exact average") {
  RngStream rng(56);
  const int m = 10000;

  auto run = [&](const PureState& psi) {
    auto p = char_distribution(psi);
    auto q = weyl_distribution(psi);
    double scale = static_cast<double>(psi.dimension());
    double exact = 0;
    for (uint64_t x = 0; x < p.size(); ++x) exact += q[x] * scale * p[x];

    BellSampler sampler(psi, SampleMode::Exact, {});
    double mean = 0;
    for (int i = 0; i < m; ++i) {
      mean += weyl_twocopy_measure(psi, sampler.sample(rng), rng);
    }
    mean /= m;
    CHECK(std::abs(mean - exact) < 4.0 / std::sqrt(m));
    return exact;
  };

  double eta_t = run(make_t_state());
  CHECK(eta_t == doctest::Approx(0.625).epsilon(1e-12));
  run(haar_random(2, rng));
}

TEST_CASE("mode feasibility caps") {
  auto wide = PureState::zero_state(7);
  CHECK_THROWS_AS(BellSampler(wide, SampleMode::Exact, {}), cap_error);
  CHECK_THROWS_AS(BellSampler(wide, SampleMode::Physical, {}), cap_error);

  // 2n = 12 still fits the statevector cap.
  auto six = PureState::zero_state(6);
  BellSampler ok(six, SampleMode::Physical, {});
  RngStream rng(57);
  CHECK(ok.sample(rng).a_bits() == 0);
}
