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

#include "stabkit/learners.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "stabkit/cliques.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/rng.hpp"
#include "stabkit/shadows.hpp"

namespace stabkit {

namespace {

void check_delta_range(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw param_error("delta must satisfy 0 < delta < 1");
  }
}

// Counts are ceilinged so rounding can only add samples, never remove the
// margin the tail bounds assume.
uint64_t ceil_count(double x) { return static_cast<uint64_t>(std::ceil(x)); }

}  // namespace

DistinguishReport distinguish(const PureState& psi, double delta, uint64_t seed, SampleMode mode,
                              bool early_exit, const Caps& caps) {
  const int n = psi.n();
  check_delta_range(delta);
  // The failure-probability union bound degrades once delta is doubly
  // exponentially small in n; refuse instead of extrapolating. Compared in
  // log space so no subnormal delta sneaks past the check.
  if (std::log2(delta) < -std::ldexp(1.0, 2 * n)) {
    std::ostringstream msg;
    msg << "delta must satisfy log2(delta) >= -4^n = " << -std::ldexp(1.0, 2 * n)
        << ", got log2(delta) = " << std::log2(delta)
        << "; the sample-count bound does not cover doubly exponentially small delta";
    throw param_error(msg.str());
  }

  const uint64_t m = ceil_count(6.0 * n + 4.5 * std::log2(2.0 / delta));

  RngStream rng(seed);
  const BellSampler sampler(psi, mode, caps);

  // Incremental F2 rank over the 2n-bit difference labels. pivots[j] is the
  // stored row whose lowest set bit is j, or 0 when column j is unclaimed.
  std::vector<uint64_t> pivots(static_cast<size_t>(2 * n), 0);
  int rank = 0;
  auto absorb = [&](uint64_t w) {
    while (w != 0) {
      const int j = std::countr_zero(w);
      if (pivots[static_cast<size_t>(j)] == 0) {
        pivots[static_cast<size_t>(j)] = w;
        ++rank;
        return;
      }
      w ^= pivots[static_cast<size_t>(j)];
    }
  };

  uint64_t used = 0;
  while (used < m) {
    absorb(sampler.sample(rng).bits());
    ++used;
    if (early_exit && rank == 2 * n) break;
  }

  return DistinguishReport{
      .n = n,
      .verdict = rank == 2 * n ? 0 : 1,
      .span_dim = rank,
      .m_used = used,
      .seed = seed,
      .mode = mode,
      .delta = delta,
  };
}

FidelityReport estimate_fidelity(const PureState& psi, double tau, double eps, double delta,
                                 uint64_t seed, SampleMode mode, const Caps& caps) {
  const int n = psi.n();
  if (!(eps > 0.0) || !(eps < tau) || !(tau <= 1.0)) {
    throw param_error("tolerances must satisfy 0 < eps < tau <= 1");
  }
  check_delta_range(delta);

  const double log2_fail = std::log2(2.0 / delta);
  const double tau4 = tau * tau * tau * tau;
  const uint64_t m_clique = ceil_count((8.0 + 4.0 * std::sqrt(3.0)) / tau4 * (n + log2_fail));

  RngStream rng(seed);
  const BellSampler sampler(psi, mode, caps);
  std::vector<F2Vec> labels;
  labels.reserve(m_clique);
  for (uint64_t i = 0; i < m_clique; ++i) {
    labels.push_back(sampler.sample(rng));
  }

  const CommGraph graph = build_comm_graph(n, labels);
  const size_t vertex_count = graph.size();
  // Checked before the shadow pass so an oversized instance fails cheap.
  if (vertex_count > static_cast<size_t>(caps.max_clique_vertices)) {
    std::ostringstream msg;
    msg << "comm graph has " << vertex_count << " vertices, cap is " << caps.max_clique_vertices
        << "; raise the vertex cap or reduce the sample count via larger tau or delta";
    throw cap_error(msg.str());
  }

  // Shadow budget sized for every signed state of every Lagrangian clique
  // span: at most 3^{v/3} maximal cliques times 2^n signings. Kept in log
  // space; half the accuracy and failure budgets go to this stage.
  const double ln_states = n * std::numbers::ln2 + vertex_count / 3.0 * std::log(3.0);
  const double ln_tail = std::numbers::ln2 + ln_states - std::log(delta / 2.0);
  const double eps_shadow = eps / 2.0;
  const uint64_t m_shadow = ceil_count(34.0 * ln_tail / (eps_shadow * eps_shadow));
  const int batch_count = static_cast<int>(ceil_count(2.0 * ln_tail));

  const ShadowSet shadows = collect_shadows(psi, m_shadow, rng, batch_count, caps);

  const auto cliques = maximal_cliques(graph, static_cast<size_t>(caps.max_clique_vertices));

  // Distinct full-dimension spans, canonical order. Different maximal
  // cliques can span the same group; the RREF rows dedupe them.
  const auto& verts = graph.vertices();
  std::set<std::vector<uint64_t>> seen;
  std::vector<Subspace> groups;
  for (const auto& clique : cliques) {
    std::vector<F2Vec> members;
    members.reserve(clique.size());
    for (int idx : clique) {
      members.push_back(verts[static_cast<size_t>(idx)]);
    }
    Subspace s = Subspace::span(n, members);
    if (s.dim() != n) {
      continue;
    }
    if (seen.insert(s.rows()).second) {
      groups.push_back(std::move(s));
    }
  }
  std::sort(groups.begin(), groups.end(),
            [n](const Subspace& a, const Subspace& b) { return lex_less_rows(a.rows(), b.rows(), n); });

  StabilizerState witness = StabilizerState::zero_state(n);
  double raw = 0.0;
  if (groups.empty()) {
    // No sampled clique spans a full group. Fall back to a fixed default so
    // the report stays total; the accuracy guarantee only ever promised
    // success with probability 1 - delta.
    raw = estimate_stabilizer_fidelity(shadows, witness);
  } else {
    const auto family = estimate_sign_families(shadows, groups);
    double best = -std::numeric_limits<double>::infinity();
    size_t best_group = 0;
    uint64_t best_signs = 0;
    for (size_t g = 0; g < groups.size(); ++g) {
      for (size_t s = 0; s < family[g].size(); ++s) {
        // Strict comparison keeps the first maximizer, so ties resolve to
        // the lowest (group rows, sign counter) pair.
        if (family[g][s] > best) {
          best = family[g][s];
          best_group = g;
          best_signs = s;
        }
      }
    }
    const std::vector<F2Vec> rows = groups[best_group].basis();
    std::vector<uint8_t> signs(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      signs[i] = static_cast<uint8_t>((best_signs >> i) & 1);
    }
    witness = StabilizerState::from_generators(n, rows, signs);
    raw = best;
  }

  return FidelityReport{
      .n = n,
      .witness = std::move(witness),
      .estimate = std::clamp(raw, 0.0, 1.0),
      .raw_estimate = raw,
      .clique_count = cliques.size(),
      .candidate_count = groups.size() * (size_t{1} << n),
      .m_clique = m_clique,
      .m_shadow = m_shadow,
      .batch_count = batch_count,
      .seed = seed,
      .mode = mode,
      .tau = tau,
      .eps = eps,
      .delta = delta,
  };
}

double eta_estimate(const PureState& psi, uint64_t m, uint64_t seed, SampleMode mode,
                    const Caps& caps) {
  if (m < 1) {
    throw param_error("sample count must satisfy m >= 1");
  }
  RngStream rng(seed);
  const BellSampler sampler(psi, mode, caps);
  double acc = 0.0;
  for (uint64_t i = 0; i < m; ++i) {
    const F2Vec x = sampler.sample(rng);
    acc += weyl_twocopy_measure(psi, x, rng);
  }
  return acc / static_cast<double>(m);
}

TestReport tolerant_test(const PureState& psi, double alpha1, double alpha2, double delta,
                         uint64_t seed, SampleMode mode, const Caps& caps) {
  if (!(alpha1 >= 0.0) || !(alpha1 <= 1.0) || !(alpha2 >= 0.0) || !(alpha2 <= 1.0)) {
    throw param_error("alpha1 and alpha2 must lie in [0, 1]");
  }
  check_delta_range(delta);
  const double close_floor = std::pow(alpha1, 6.0);
  const double far_ceiling = (3.0 * alpha2 + 1.0) / 4.0;
  const double gamma = close_floor - far_ceiling;
  if (!(gamma > 0.0)) {
    std::ostringstream msg;
    msg << "infeasible tolerance pair: need alpha1^6 > (3*alpha2 + 1)/4, got " << close_floor
        << " <= " << far_ceiling;
    throw param_error(msg.str());
  }

  const uint64_t m = ceil_count(8.0 * std::log2(2.0 / delta) / (gamma * gamma));
  const double eta_hat = eta_estimate(psi, m, seed, mode, caps);
  const double threshold = close_floor - gamma / 2.0;

  return TestReport{
      .n = psi.n(),
      .verdict = eta_hat > threshold ? 1 : 0,
      .eta_hat = eta_hat,
      .threshold = threshold,
      .gamma = gamma,
      .m = m,
      .seed = seed,
      .mode = mode,
      .alpha1 = alpha1,
      .alpha2 = alpha2,
      .delta = delta,
  };
}

RegimeCheck regime_check(double alpha1, double alpha2) {
  if (!(alpha1 >= 0.0) || !(alpha1 <= 1.0) || !(alpha2 >= 0.0) || !(alpha2 <= 1.0)) {
    throw param_error("alpha1 and alpha2 must lie in [0, 1]");
  }
  RegimeCheck out;
  out.ours = std::pow(alpha1, 6.0) > (3.0 * alpha2 + 1.0) / 4.0;
  out.gnw = 1.0 - 12.0 * std::sqrt(1.0 - alpha1) > (alpha2 + 1.0) / 2.0;
  return out;
}

}  // namespace stabkit
