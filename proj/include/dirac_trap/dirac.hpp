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

#pragma once

// Dirac matrices in the two-qubit representation alpha_i = sigma_x (x) sigma_i,
// beta = sigma_z (x) I, and the non-minimally coupled Hamiltonian built from
// them. Natural units (hbar = c = 1). Rows/columns are the ionic levels
// a, b, c, d = |00>, |01>, |10>, |11>.

#include <array>

#include "dirac_trap/linalg.hpp"

namespace dirac_trap::dirac {

using linalg::Mat4;
using linalg::Vec3;

struct DiracParams {
  double m = 0.0;
  Vec3 p{};
  double kappa = 0.0;  // electric dipole moment
  double mu = 0.0;     // magnetic dipole moment
  Vec3 E{};            // electric field
  Vec3 B{};            // magnetic field; must be zero wherever g1/g2 algebra is used

  bool has_magnetic_field() const { return B[0] != 0.0 || B[1] != 0.0 || B[2] != 0.0; }
};

/// One-dimensional propagation along x with the field in the x-y plane:
/// p = p x^, E = eps (cos theta x^ + sin theta y^), B = 0.
struct PlanarConfig {
  double m = 1.0;
  double p = 1.0;
  double eps = 1.0;
  double theta = 0.0;
  double kappa = 0.0;
  double mu = 0.0;

  DiracParams to_params() const;
};

struct Invariants {
  double g1 = 0.0;
  double g2 = 0.0;
};

struct DiracMatrices {
  std::array<Mat4, 3> alpha;
  Mat4 beta;
  std::array<Mat4, 3> Sigma;
  Mat4 gamma5;  // -i alpha_x alpha_y alpha_z = sigma_x (x) I
};

/// Which operator an "averaged chirality" refers to.
///   dirac:       gamma5 = -i alpha_x alpha_y alpha_z = sigma_x (x) I (couples a<->c, b<->d)
///   ionic_pairs: |a><d| + |d><a| + |b><c| + |c><b| (couples a<->d, b<->c); this
///                is the operator for which <.> = 2 (P_ad + P_cb) - 1.
enum class Gamma5Form { dirac, ionic_pairs };

const DiracMatrices& dirac_matrices();

/// The chirality operator in the requested form.
Mat4 gamma5(Gamma5Form form);

/// alpha.p + beta m + kappa beta (Sigma.E + i alpha.B) + mu beta (i alpha.E - Sigma.B)
Mat4 hamiltonian(const DiracParams& params);

/// m kappa Sigma.E + mu beta Sigma.(p x E) - i kappa beta alpha.(p x E), so that
/// H^2 = g1 I + 2 O and O^2 = g2 I. Throws magnetic_field_unsupported when B != 0.
Mat4 o_operator(const DiracParams& params);

/// Closed-form g1 = p^2 + m^2 + (kappa^2 + mu^2) E^2 and
/// g2 = m^2 kappa^2 E^2 + (mu^2 + kappa^2) |p x E|^2.
Invariants invariants(const DiracParams& params);

/// g1 = Tr[H^2]/4 and g2 = Tr[(H^2 - g1)^2]/16 straight from the matrices.
Invariants invariants_from_traces(const Mat4& h);

/// g1^2 - 4 g2 written as a sum of squares:
/// (p^2 + m^2 - (kappa^2+mu^2)E^2)^2 + 4 m^2 mu^2 E^2 + 4 (kappa^2+mu^2)(p.E)^2.
double spectral_gap_discriminant(const DiracParams& params);

/// Throws invalid_params on non-finite entries.
void validate(const DiracParams& params);

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);

}  // namespace dirac_trap::dirac
