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

#include "stabkit/verify.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "stabkit/errors.hpp"
#include "stabkit/f2lin.hpp"
#include "stabkit/rng.hpp"
#include "stabkit/states.hpp"

namespace stabkit {

namespace {

constexpr double kMassTol = 1e-9;
constexpr double kFourierTol = 1e-10;

Subspace random_subspace(int n, RngStream& rng) {
  const uint64_t full = uint64_t{1} << (2 * n);
  const auto count = static_cast<size_t>(rng.next_below(static_cast<uint64_t>(2 * n + 1)));
  std::vector<F2Vec> gens;
  gens.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    gens.emplace_back(n, rng.next_below(full));
  }
  return Subspace::span(n, gens);
}

void track(double err, double tol, int& failures, double& worst) {
  if (err > worst) {
    worst = err;
  }
  if (err > tol) {
    ++failures;
  }
}

}  // namespace

IdentitySuiteResult run_identity_suite(int n, int trials, uint64_t seed, const Caps& caps) {
  if (n < 1) {
    throw param_error("qubit count must satisfy n >= 1");
  }
  if (trials < 1) {
    throw param_error("trial count must satisfy trials >= 1");
  }

  IdentitySuiteResult out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;

  RngStream rng(seed);
  const size_t table = size_t{1} << (2 * n);
  for (int trial = 0; trial < trials; ++trial) {
    const PureState psi = haar_random(n, rng, caps);
    const PureState chi = haar_random(n, rng, caps);
    const Subspace t = random_subspace(n, rng);
    const Subspace t_perp = symplectic_complement(t);

    const CharDistribution p = char_distribution(psi, caps);
    const WeylDistribution q = weyl_distribution(p);

    // Mass of p on T versus 2^{dim T - n} times the mass on its complement.
    const double lhs_mass = subspace_mass(p, t);
    const double rhs_mass = std::ldexp(subspace_mass(p, t_perp), t.dim() - n);
    track(std::abs(lhs_mass - rhs_mass), kMassTol, out.mass_duality_failures, out.worst_error);

    // Mass of q on T, renormalized by |T|, versus the squared p-mass of the
    // complement.
    double sq_tail = 0.0;
    for (const F2Vec& w : SubspaceElements(t_perp)) {
      const double val = p.at(w);
      sq_tail += val * val;
    }
    const double conv_lhs = std::ldexp(subspace_mass(q, t), -t.dim());
    track(std::abs(conv_lhs - sq_tail), kMassTol, out.conv_mass_failures, out.worst_error);

    // p is a fixed point of the symplectic transform up to the 2^n scale.
    const std::vector<double> sf = symplectic_fourier(p.values());
    double worst_fp = 0.0;
    for (size_t w = 0; w < table; ++w) {
      worst_fp = std::max(worst_fp, std::abs(std::ldexp(sf[w], n) - p[w]));
    }
    track(worst_fp, kFourierTol, out.fourier_fixed_point_failures, out.worst_error);

    // Transform of a convolution equals the pointwise product of transforms.
    // The convolution uses the uniform counting measure, hence the 4^-n scale.
    const CharDistribution g = char_distribution(chi, caps);
    std::vector<double> conv(table, 0.0);
    for (size_t x = 0; x < table; ++x) {
      const double px = p[x];
      if (px == 0.0) {
        continue;
      }
      for (size_t y = 0; y < table; ++y) {
        conv[x ^ y] += px * g[y];
      }
    }
    const double conv_scale = std::ldexp(1.0, -2 * n);
    for (double& v : conv) v *= conv_scale;
    const std::vector<double> sf_conv = symplectic_fourier(conv);
    const std::vector<double> sf_g = symplectic_fourier(g.values());
    double worst_prod = 0.0;
    for (size_t w = 0; w < table; ++w) {
      worst_prod = std::max(worst_prod, std::abs(sf_conv[w] - sf[w] * sf_g[w]));
    }
    track(worst_prod, kFourierTol, out.fourier_product_failures, out.worst_error);
  }
  return out;
}

}  // namespace stabkit
