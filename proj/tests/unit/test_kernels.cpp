// Copyright 2026 The dirac-trap Authors
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

#include <doctest.h>

#include <limits>
#include <numbers>
#include <random>

#include "dirac_trap/entanglement.hpp"
#include "dirac_trap/error.hpp"
#include "dirac_trap/kernels.hpp"
#include "oracles.hpp"

using namespace dirac_trap;
using namespace dirac_trap::kernels;
using dirac::Gamma5Form;
using dirac::PlanarConfig;
using linalg::Mat4;
using linalg::Vec4;

namespace {

// Odd length so every vector variant runs its tail.
constexpr std::size_t kLength = 1003;

AmplitudeBlock random_block(std::mt19937_64& rng, std::size_t n) {
  AmplitudeBlock block;
  block.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec4 psi = testing::random_state(rng);
    for (std::size_t k = 0; k < 4; ++k) {
      block.re[k][i] = std::real(psi[k]);
      block.im[k][i] = std::imag(psi[k]);
    }
  }
  return block;
}

PlanarBatch random_batch(std::uint64_t seed, std::size_t n) {
  testing::PlanarSampler sampler(seed);
  PlanarBatch batch;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanarConfig c = sampler.next();
    batch.push_back(c.m, c.p, c.eps, c.theta, c.kappa, c.mu);
  }
  return batch;
}

bool same(double x, double y, double tol) {
  if (std::isnan(x) || std::isnan(y)) return std::isnan(x) && std::isnan(y);
  return std::abs(x - y) <= tol;
}

}  // namespace

TEST_CASE("dispatch") {
  CHECK(isa_available(Isa::scalar));
  CHECK(isa_available(detected_isa()));
  CHECK(to_string(Isa::scalar) == "scalar");
  CHECK(to_string(Isa::avx2) == "avx2");
}

TEST_CASE("scalar reference") {
  SUBCASE("synthesis at t = 0 sums the coefficients") {
    SpectralCoefficients c;
    for (std::size_t i = 0; i < 16; ++i) {
      c.re[i] = 0.1 * static_cast<double>(i);
      c.im[i] = -0.05 * static_cast<double>(i);
    }
    const std::vector<double> t{0.0};
    AmplitudeBlock out;
    synthesize_amplitudes(Isa::scalar, c, make_phase_table({1.0, 2.0, 3.0, 4.0}, t), out);
    for (std::size_t k = 0; k < 4; ++k) {
      double re = 0.0, im = 0.0;
      for (std::size_t n = 0; n < 4; ++n) {
        re += c.re[4 * k + n];
        im += c.im[4 * k + n];
      }
      CHECK(out.re[k][0] == doctest::Approx(re));
      CHECK(out.im[k][0] == doctest::Approx(im));
    }
  }

  SUBCASE("pair observables against the state formulas") {
    std::mt19937_64 rng(testing::kSeed + 9);
    const AmplitudeBlock block = random_block(rng, 64);
    PairObservables obs;
    pair_observables(Isa::scalar, block, obs);
    for (std::size_t i = 0; i < block.size(); ++i) {
      Vec4 psi;
      for (std::size_t k = 0; k < 4; ++k) psi[k] = {block.re[k][i], block.im[k][i]};
      CHECK(std::abs(obs.concurrence[i] - testing::concurrence_partial_trace(psi)) <= 1e-12);
      CHECK(std::abs(obs.pair_chirality[i] - entanglement::chirality(psi, Gamma5Form::ionic_pairs)) <= 1e-12);
      const entanglement::SuperpositionProbabilities sp = entanglement::superposition_probabilities(psi);
      CHECK(std::abs(obs.P_ad[i] - sp.P_ad) <= 1e-12);
      CHECK(std::abs(obs.P_cb[i] - sp.P_cb) <= 1e-12);
    }
  }

  SUBCASE("planar batch against the library closed forms") {
    const PlanarBatch batch = random_batch(41, 500);
    for (const spectrum::ModeIndex mode : spectrum::kAllModes) {
      PlanarObservables obs;
      planar_observables(Isa::scalar, batch, mode.n, mode.s, obs);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const PlanarConfig c{batch.m[i], batch.p[i], batch.eps[i], std::atan2(batch.sin_theta[i], batch.cos_theta[i]),
                             batch.kappa[i], batch.mu[i]};
        const double lam = spectrum::eigenvalue(c.to_params(), mode);
        CHECK(std::abs(obs.lambda[i] - lam) <= 1e-12 * std::abs(lam));
        const Mat4 rho = spectrum::eigen_density(c.to_params(), mode);
        CHECK(std::abs(obs.concurrence[i] - entanglement::concurrence(rho)) <= 1e-10);
        CHECK(std::abs(obs.chirality[i] - entanglement::chirality(rho, Gamma5Form::dirac)) <= 1e-10);
      }
    }
  }

  SUBCASE("degenerate entries are NaN") {
    PlanarBatch batch;
    batch.push_back(1.0, 1.0, 1.0, 0.3, 0.0, 0.0);
    batch.push_back(1.0, 0.0, 1.0, 0.3, 0.0, 1.0);
    PlanarObservables obs;
    planar_observables(Isa::scalar, batch, 0, 0, obs);
    CHECK(std::isnan(obs.concurrence[0]));
    CHECK(std::isnan(obs.concurrence[1]));
    CHECK_THROWS_AS(planar_observables(Isa::scalar, batch, 2, 0, obs), Error);
  }
}

TEST_CASE("vector variants match the scalar reference") {
  for (Isa isa : {Isa::avx2}) {
    if (!isa_available(isa)) {
      PlanarObservables unused;
      CHECK_THROWS_AS(planar_observables(isa, PlanarBatch{}, 0, 0, unused), Error);
      continue;
    }
    std::mt19937_64 rng(testing::kSeed + 10);

    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4}, kLength}) {
      CAPTURE(n);
      SpectralCoefficients coeffs;
      std::normal_distribution<double> gauss;
      for (std::size_t i = 0; i < 16; ++i) {
        coeffs.re[i] = gauss(rng);
        coeffs.im[i] = gauss(rng);
      }
      std::vector<double> times(n);
      for (std::size_t i = 0; i < n; ++i) times[i] = 0.02 * static_cast<double>(i);
      const PhaseTable phases = make_phase_table({2.1, 0.7, -0.7, -2.1}, times);

      AmplitudeBlock ref, vec;
      synthesize_amplitudes(Isa::scalar, coeffs, phases, ref);
      synthesize_amplitudes(isa, coeffs, phases, vec);
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(std::abs(ref.re[k][i] - vec.re[k][i]) <= 1e-14);
          CHECK(std::abs(ref.im[k][i] - vec.im[k][i]) <= 1e-14);
        }

      const AmplitudeBlock block = random_block(rng, n);
      std::array<std::vector<double>, 4> p_ref, p_vec;
      probabilities(Isa::scalar, block, p_ref);
      probabilities(isa, block, p_vec);
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(p_ref[k][i] - p_vec[k][i]) <= 1e-15);

      PairObservables o_ref, o_vec;
      pair_observables(Isa::scalar, block, o_ref);
      pair_observables(isa, block, o_vec);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(o_ref.concurrence[i] - o_vec.concurrence[i]) <= 1e-14);
        CHECK(std::abs(o_ref.pair_chirality[i] - o_vec.pair_chirality[i]) <= 1e-14);
        CHECK(std::abs(o_ref.P_ad[i] - o_vec.P_ad[i]) <= 1e-14);
        CHECK(std::abs(o_ref.P_cb[i] - o_vec.P_cb[i]) <= 1e-14);
      }
    }

    SUBCASE("planar batch including degenerate rows") {
      PlanarBatch batch = random_batch(43, kLength);
      batch.push_back(1.0, 1.0, 1.0, 0.3, 0.0, 0.0);
      batch.push_back(0.0, 1.0, 1.0, 0.0, 0.5, 0.5);
      batch.push_back(1e-8, 1.0, 1.0, 0.3, 1.0, 1.0);
      for (const spectrum::ModeIndex mode : spectrum::kAllModes) {
        PlanarObservables ref, vec;
        planar_observables(Isa::scalar, batch, mode.n, mode.s, ref);
        planar_observables(isa, batch, mode.n, mode.s, vec);
        for (std::size_t i = 0; i < batch.size(); ++i) {
          CHECK(same(ref.lambda[i], vec.lambda[i], 1e-13 * std::max(1.0, std::abs(ref.lambda[i]))));
          CHECK(same(ref.concurrence[i], vec.concurrence[i], 1e-12));
          CHECK(same(ref.chirality[i], vec.chirality[i], 1e-12));
        }
      }
    }
  }
}
