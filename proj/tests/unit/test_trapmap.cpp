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

#include <random>

#include "dirac_trap/error.hpp"
#include "dirac_trap/trapmap.hpp"
#include "oracles.hpp"

using namespace dirac_trap;
using namespace dirac_trap::trapmap;
using linalg::Complex;
using linalg::max_abs;

namespace {

using enum dynamics::IonicLabel;

Mat4 s(IonicLabel i, IonicLabel j, Axis axis) { return sigma_pair(i, j, axis).matrix; }

TrapParams random_trap(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.05, 2.0);
  std::uniform_real_distribution<double> sym(-2.0, 2.0);
  TrapParams tp;
  tp.eta = pos(rng);
  tp.Delta = pos(rng);
  tp.OmegaTilde = pos(rng);
  tp.delta_det = pos(rng);
  const Vec3 dir{sym(rng), sym(rng), sym(rng)};
  const double a = sym(rng), b = sym(rng);
  for (std::size_t i = 0; i < 3; ++i) {
    tp.Omega1[i] = a * dir[i];
    tp.Omega2[i] = b * dir[i];
  }
  return tp;
}

}  // namespace

TEST_CASE("sigma_pair") {
  CHECK(s(a, d, Axis::z) == Mat4::diagonal({1.0, 0.0, 0.0, -1.0}));
  const Mat4 bc = s(b, c, Axis::x);
  CHECK(bc(1, 2) == Complex(1.0));
  CHECK(bc(2, 1) == Complex(1.0));
  CHECK(max_abs(bc) == 1.0);
  CHECK(s(a, d, Axis::z) + s(b, c, Axis::z) == dirac::dirac_matrices().beta);
  CHECK(s(d, a, Axis::y) == s(a, d, Axis::y));

  try {
    sigma_pair(b, b, Axis::x);
    FAIL("expected InvalidPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_pair);
  }
}

TEST_CASE("generator identities") {
  const dirac::DiracMatrices& dm = dirac::dirac_matrices();
  CHECK(s(a, d, Axis::x) + s(b, c, Axis::x) == dm.alpha[0]);
  CHECK(s(a, d, Axis::y) - s(b, c, Axis::y) == dm.alpha[1]);
  CHECK(s(a, c, Axis::x) - s(b, d, Axis::x) == dm.alpha[2]);

  CHECK(s(a, b, Axis::x) - s(c, d, Axis::x) == dm.beta * dm.Sigma[0]);
  CHECK(s(a, b, Axis::y) - s(c, d, Axis::y) == dm.beta * dm.Sigma[1]);
  CHECK(s(a, b, Axis::z) - s(c, d, Axis::z) == dm.beta * dm.Sigma[2]);

  const Complex i1{0.0, 1.0};
  CHECK(Mat4{} - s(a, d, Axis::y) - s(b, c, Axis::y) == i1 * (dm.beta * dm.alpha[0]));
  CHECK(s(a, d, Axis::x) - s(b, c, Axis::x) == i1 * (dm.beta * dm.alpha[1]));
  CHECK(s(b, d, Axis::y) - s(a, c, Axis::y) == i1 * (dm.beta * dm.alpha[2]));
}

TEST_CASE("mapped hamiltonian") {
  SUBCASE("detuning only") {
    TrapParams tp;
    tp.delta_det = 0.75;
    CHECK(assemble_mapped_hamiltonian(tp, {}) == 1.5 * dirac::dirac_matrices().beta);
  }

  SUBCASE("one carrier component") {
    TrapParams tp;
    tp.Omega1 = {0.3, 0.0, 0.0};
    const dirac::DiracMatrices& dm = dirac::dirac_matrices();
    CHECK(max_abs(assemble_mapped_hamiltonian(tp, {}) - 0.6 * (dm.beta * dm.Sigma[0])) <= 1e-16);
  }

  SUBCASE("random draws") {
    std::mt19937_64 rng(testing::kSeed + 7);
    std::uniform_real_distribution<double> mom(-2.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
      const TrapParams tp = random_trap(rng);
      const Vec3 p{mom(rng), mom(rng), mom(rng)};
      const Mat4 mapped = assemble_mapped_hamiltonian(tp, p);
      const Mat4 direct = dirac::hamiltonian(dirac_from_trap(tp, p));
      CHECK(max_abs(mapped - direct) <= 1e-12 * linalg::max_abs(direct));
    }
  }
}

TEST_CASE("parameter correspondence") {
  SUBCASE("zero detuning is massless") {
    TrapParams tp;
    tp.eta = tp.Delta = tp.OmegaTilde = 1.0;
    CHECK(dirac_from_trap(tp).m == 0.0);
  }

  SUBCASE("no carriers is a free particle") {
    TrapParams tp;
    tp.eta = tp.Delta = tp.OmegaTilde = 1.0;
    tp.delta_det = 0.5;
    const dirac::DiracParams d = dirac_from_trap(tp, {1.0, 0.0, 0.0});
    CHECK(d.kappa * dirac::dot(d.E, d.E) == 0.0);
    CHECK(d.mu * dirac::dot(d.E, d.E) == 0.0);
  }

  SUBCASE("c = 1 normalisation") {
    dirac::DiracParams d;
    d.m = 1.0;
    const TrapParams tp = trap_from_dirac(d, 0.1, 2.5);
    CHECK(tp.c_eff() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tp.delta_det == 0.5);
  }

  SUBCASE("round trip on the identifiable products") {
    testing::PlanarSampler sampler(31);
    for (int trial = 0; trial < 500; ++trial) {
      const dirac::DiracParams d = sampler.next().to_params();
      for (Gauge gauge : {Gauge::unit_field, Gauge::kappa_eq_mu}) {
        TrapParams tp = trap_from_dirac(d, 0.2, 0.7);
        if (gauge == Gauge::kappa_eq_mu) tp.Omega2 = tp.Omega1;
        const dirac::DiracParams back = dirac_from_trap(tp, d.p, gauge);
        CHECK(std::abs(back.m - d.m) <= 1e-12 * d.m);
        for (std::size_t i = 0; i < 3; ++i) {
          CHECK(std::abs(back.p[i] - d.p[i]) <= 1e-12 * std::max(1.0, std::abs(d.p[i])));
          CHECK(std::abs(back.kappa * back.E[i] - d.kappa * d.E[i]) <= 1e-12 * std::max(1.0, std::abs(d.kappa * d.E[i])));
          if (gauge == Gauge::unit_field)
            CHECK(std::abs(back.mu * back.E[i] - d.mu * d.E[i]) <= 1e-12 * std::max(1.0, std::abs(d.mu * d.E[i])));
        }
        if (gauge == Gauge::kappa_eq_mu) CHECK(back.kappa == back.mu);
      }
    }
  }

  SUBCASE("errors") {
    TrapParams tp;
    tp.delta_det = 1.0;
    try {
      dirac_from_trap(tp);
      FAIL("expected ZeroCoupling");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::zero_coupling);
    }
    tp.eta = tp.Delta = tp.OmegaTilde = 1.0;
    tp.Omega1 = {1.0, 0.0, 0.0};
    tp.Omega2 = {0.0, 1.0, 0.0};
    CHECK_THROWS_AS(dirac_from_trap(tp), Error);
    tp.Omega2 = {2.0, 0.0, 0.0};
    CHECK_THROWS_AS(dirac_from_trap(tp, {}, Gauge::kappa_eq_mu), Error);

    dirac::DiracParams magnetic;
    magnetic.B = {0.0, 0.0, 1.0};
    CHECK_THROWS_AS(trap_from_dirac(magnetic), Error);
  }

  SUBCASE("raw trap inputs") {
    const TrapParams tp = TrapParams::from_raw({2.0, 4.0, 3.0}, 1.0, 0.0, {}, {});
    CHECK(tp.Delta == doctest::Approx(std::sqrt(1.0 / 16.0)));
    CHECK(tp.eta == doctest::Approx(3.0 * std::sqrt(1.0 / 16.0)));
    CHECK(tp.raw.has_value());
    CHECK_THROWS_AS(TrapParams::from_raw({0.0, 1.0, 1.0}, 1.0, 0.0, {}, {}), Error);
  }

  CHECK(kPhiRed == doctest::Approx(-std::numbers::pi / 2.0));
  CHECK(kPhiBlue == doctest::Approx(std::numbers::pi / 2.0));
}

TEST_CASE("qubit index") {
  CHECK(qubit_index(a) == std::pair{0, 0});
  CHECK(qubit_index(b) == std::pair{0, 1});
  CHECK(qubit_index(c) == std::pair{1, 0});
  CHECK(qubit_index(d) == std::pair{1, 1});
}
