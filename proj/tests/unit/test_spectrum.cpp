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

#include <algorithm>
#include <numbers>

#include "dirac_trap/error.hpp"
#include "dirac_trap/spectrum.hpp"
#include "oracles.hpp"

using namespace dirac_trap;
using namespace dirac_trap::spectrum;
using linalg::max_abs;

namespace {

constexpr double kQuarter = std::numbers::pi / 4.0;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_params;
}

}  // namespace

TEST_CASE("eigenvalues") {
  const PlanarConfig perpendicular{1.0, 1.0, 1.0, std::numbers::pi / 2.0, 0.0, 1.0};
  CHECK(eigenvalue(perpendicular.to_params(), {0, 0}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(eigenvalue(perpendicular.to_params(), {1, 0}) == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-15));

  SUBCASE("continuity into the free limit") {
    const PlanarConfig weak{1.0, 1.0, 1.0, kQuarter, 1e-6, 0.0};
    for (ModeIndex mode : kAllModes)
      CHECK(std::abs(std::abs(eigenvalue(weak.to_params(), mode)) - std::sqrt(2.0)) <= 1e-5);
  }

  SUBCASE("multiset equals the Jacobi oracle") {
    testing::PlanarSampler sampler;
    for (int trial = 0; trial < 500; ++trial) {
      const DiracParams d = sampler.next().to_params();
      std::array<double, 4> closed;
      for (ModeIndex mode : kAllModes) closed[mode.column()] = eigenvalue(d, mode);
      std::sort(closed.begin(), closed.end());
      const auto oracle = linalg::hermitian_eig(dirac::hamiltonian(d)).eigenvalues;
      for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(closed[i] - oracle[i]) <= 1e-10 * std::abs(oracle[3]));
    }
  }

  CHECK(code_of([] { eigenvalue({}, {2, 0}); }) == ErrorCode::invalid_params);
}

TEST_CASE("eigen densities") {
  const PlanarConfig cfg{1.0, 1.0, 1.0, kQuarter, 1.0, 1.0};
  const DiracParams d = cfg.to_params();
  const Mat4 h = dirac::hamiltonian(d);
  Mat4 sum;
  for (ModeIndex mode : kAllModes) {
    const Mat4 rho = eigen_density(d, mode);
    CHECK(std::abs(linalg::trace(rho) - 1.0) <= 1e-12);
    CHECK(std::abs(linalg::trace(rho * rho) - 1.0) <= 1e-12);
    CHECK(linalg::commutator_norm(rho, h) <= 1e-12 * linalg::frobenius_norm(h));
    CHECK(std::real(linalg::trace(h * rho)) == doctest::Approx(eigenvalue(d, mode)).epsilon(1e-12));
    sum += rho;
  }
  CHECK(max_abs(sum - Mat4::identity()) <= 1e-12);

  const PlanarConfig free_particle{1.0, 1.0, 1.0, kQuarter, 0.0, 0.0};
  CHECK(code_of([&] { eigen_density(free_particle.to_params(), {0, 0}); }) == ErrorCode::degenerate_invariant);
}

TEST_CASE("coefficients") {
  SUBCASE("closed forms match the density") {
    testing::PlanarSampler sampler(11);
    for (int trial = 0; trial < 300; ++trial) {
      const PlanarConfig cfg = sampler.next();
      for (ModeIndex mode : kAllModes) {
        const Coefficients generic = coefficients(cfg.to_params(), mode);
        const PlanarCoefficients closed = planar_coefficients(cfg, mode);
        double total = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
          CHECK(std::abs(generic.moduli[i] - closed.moduli[i]) <= 1e-10);
          total += generic.moduli[i] * generic.moduli[i];
        }
        CHECK(std::abs(total - 1.0) <= 1e-12);
        for (std::size_t k = 0; k < 3; ++k) {
          REQUIRE(generic.phases[k].has_value() == closed.phases[k].has_value());
          // Compared as the off-diagonal density entry they produce: the angle
          // itself is ill-conditioned once either modulus is small.
          if (generic.phases[k]) {
            const double weight = generic.moduli[0] * generic.moduli[k + 1];
            CHECK(weight * std::abs(*generic.phases[k] - *closed.phases[k]) <= 1e-10);
          }
        }
      }
    }
  }

  SUBCASE("the state reproduces rho with the anchor real and positive") {
    const PlanarConfig cfg{1.0, 1.0, 1.0, kQuarter, 1.0, 1.0};
    for (ModeIndex mode : kAllModes) {
      const Mat4 rho = eigen_density(cfg.to_params(), mode);
      const Coefficients c = coefficients_from_density(rho);
      CHECK(c.anchor == 0);
      CHECK(std::imag(c.state[0]) == 0.0);
      CHECK(std::real(c.state[0]) > 0.0);
      CHECK(max_abs(linalg::outer(c.state, c.state) - rho) <= 1e-12);
    }
  }

  SUBCASE("kappa = 0 decouples the a-d and b-c pairs") {
    const PlanarConfig cfg{1.0, 1.0, 1.0, kQuarter, 0.0, 1.0};
    for (ModeIndex mode : kAllModes) {
      const Coefficients c = coefficients(cfg.to_params(), mode);
      const bool ad_pair = c.moduli[0] > kPhaseFloor || c.moduli[3] > kPhaseFloor;
      const bool bc_pair = c.moduli[1] > kPhaseFloor || c.moduli[2] > kPhaseFloor;
      CHECK(ad_pair != bc_pair);
      CHECK_FALSE(c.phases[0].has_value());
      CHECK_FALSE(c.phases[1].has_value());
    }
  }

  SUBCASE("anchor moves when |M^a| vanishes") {
    const PlanarConfig cfg{1.0, 1.0, 1.0, kQuarter, 0.0, 1.0};
    for (ModeIndex mode : kAllModes) {
      const Coefficients c = coefficients(cfg.to_params(), mode);
      if (c.moduli[0] > kPhaseFloor) continue;
      CHECK(c.anchor == 1);
      CHECK(std::imag(c.state[1]) == 0.0);
      CHECK(std::real(c.state[1]) > 0.0);
    }
  }
}

TEST_CASE("eigensystem") {
  testing::PlanarSampler sampler(13);
  for (int trial = 0; trial < 200; ++trial) {
    const DiracParams d = sampler.next().to_params();
    const EigenSystem sys = eigensystem(d);
    CHECK_FALSE(sys.degenerate);
    CHECK(max_abs(linalg::adjoint(sys.M) * sys.M - Mat4::identity()) <= 1e-12);
    CHECK(max_abs(sys.W * sys.M - Mat4::identity()) <= 1e-12);
    std::array<Complex, 4> diag;
    for (std::size_t c = 0; c < 4; ++c) diag[c] = sys.lambdas[c];
    const Mat4 h = dirac::hamiltonian(d);
    CHECK(max_abs(sys.M * Mat4::diagonal(diag) * sys.W - h) <= 1e-10 * linalg::frobenius_norm(h));
  }

  SUBCASE("degenerate regime") {
    const PlanarConfig free_particle{1.0, 1.0, 1.0, kQuarter, 0.0, 0.0};
    CHECK(code_of([&] { eigensystem(free_particle.to_params()); }) == ErrorCode::degenerate_invariant);
    const EigenSystem sys = eigensystem(free_particle.to_params(), Fallback::oracle);
    CHECK(sys.degenerate);
    CHECK(sys.lambda({0, 0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(sys.lambda({1, 1}) == doctest::Approx(-std::sqrt(2.0)));
    CHECK(max_abs(linalg::adjoint(sys.M) * sys.M - Mat4::identity()) <= 1e-12);
    Mat4 sum;
    for (const Mat4& rho : sys.rhos) sum += rho;
    CHECK(max_abs(sum - Mat4::identity()) <= 1e-12);
  }
}

TEST_CASE("free bispinor") {
  const std::array<Complex, 2> up{1.0, 0.0};

  SUBCASE("massless limit is maximally entangled") {
    for (int s : {0, 1}) {
      const FreeBispinor f = free_bispinor(0.0, {1.0, 0.0, 0.0}, s, up);
      CHECK(f.Ns == doctest::Approx(1.0 / std::sqrt(2.0)));
      CHECK(linalg::norm(f.state) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(testing::concurrence_partial_trace(f.state) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("p -> 0 with s = 1 leaves a product state") {
    const FreeBispinor f = free_bispinor(1.0, {1e-9, 0.0, 0.0}, 1, up);
    CHECK(std::abs(f.state[2]) + std::abs(f.state[3]) <= 1e-9);
    CHECK(testing::concurrence_partial_trace(f.state) <= 1e-8);
  }

  SUBCASE("m = p = 1") {
    const FreeBispinor f = free_bispinor(1.0, {1.0, 0.0, 0.0}, 0, up);
    CHECK(linalg::norm(f.state) == doctest::Approx(1.0).epsilon(1e-15));
    // N_s = (1/sqrt 2)(1 - m/E)^{1/2}
    CHECK(f.Ns == doctest::Approx(std::sqrt(0.5 * (1.0 - 1.0 / std::sqrt(2.0)))).epsilon(1e-15));
    CHECK(testing::concurrence_partial_trace(f.state) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  }

  CHECK(code_of([&] { free_bispinor(1.0, {1.0, 0.0, 0.0}, 0, {1.0, 1.0}); }) == ErrorCode::invalid_params);
  CHECK(code_of([&] { free_bispinor(1.0, {1.0, 0.0, 0.0}, 2, up); }) == ErrorCode::invalid_params);
}
