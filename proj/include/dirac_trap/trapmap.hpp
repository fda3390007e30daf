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

// Correspondence between a single trapped ion driven by Jaynes-Cummings,
// anti-Jaynes-Cummings and carrier interactions and the Dirac Hamiltonian
// with an electric field. Trap quantities use hbar = 1.
//
//   m c^2 = 2 delta,  c = 2 eta Delta OmegaTilde,
//   kappa E_j = 2 Omega1_j,  mu E_j / c = 2 Omega2_j

#include <numbers>
#include <optional>
#include <utility>

#include "dirac_trap/dirac.hpp"
#include "dirac_trap/dynamics.hpp"
#include "dirac_trap/linalg.hpp"

namespace dirac_trap::trapmap {

using dirac::DiracParams;
using dynamics::IonicLabel;
using linalg::Mat4;
using linalg::Vec3;

/// Sideband phases that produce the p_x term.
inline constexpr double kPhiRed = -std::numbers::pi / 2.0;
inline constexpr double kPhiBlue = std::numbers::pi / 2.0;

struct RawTrap {
  double nu = 0.0;        // trap frequency, equal on all axes
  double ion_mass = 0.0;  // m~
  double k = 0.0;         // drive wavenumber
};

struct TrapParams {
  double eta = 0.0;         // Lamb-Dicke parameter
  double Delta = 0.0;       // ground-state spread
  double OmegaTilde = 0.0;  // sideband Rabi frequency
  double delta_det = 0.0;   // detuning
  Vec3 Omega1{};            // carrier drive for the kappa term
  Vec3 Omega2{};            // carrier drive for the mu term
  std::optional<RawTrap> raw;

  /// eta = k sqrt(1 / (2 m~ nu)), Delta = sqrt(1 / (2 m~ nu)).
  static TrapParams from_raw(const RawTrap& raw, double OmegaTilde, double delta_det, const Vec3& Omega1,
                             const Vec3& Omega2);

  /// Emergent speed of light 2 eta Delta OmegaTilde.
  double c_eff() const { return 2.0 * eta * Delta * OmegaTilde; }
};

/// Throws invalid_params on non-finite or negative scalars.
void validate(const TrapParams& tp);

enum class Axis { x, y, z };

struct PauliPairOp {
  std::pair<IonicLabel, IonicLabel> levels;  // stored in basis order
  Axis axis = Axis::x;
  Mat4 matrix;
};

/// Pauli matrix on span{|i>, |j>} with the lower-indexed level as the "0"
/// state: sigma_z^{ij} = |i><i| - |j><j|, sigma_y^{ij} = -i|i><j| + i|j><i|.
/// Throws invalid_pair when the levels coincide.
PauliPairOp sigma_pair(IonicLabel first, IonicLabel second, Axis axis);

/// How kappa, mu and E are split, since the trap fixes only kappa E and mu E.
///   unit_field:  |E| = 1 along the common direction of Omega1 / Omega2
///   kappa_eq_mu: kappa = mu = 1, requires Omega1 == Omega2
enum class Gauge { unit_field, kappa_eq_mu };

/// Dirac parameters in c = 1 units with the c-number trap momentum p_trap
/// rescaled to c_eff p_trap. Omega1 and Omega2 must be parallel. Throws
/// zero_coupling when eta Delta OmegaTilde = 0.
DiracParams dirac_from_trap(const TrapParams& tp, const Vec3& p_trap = {}, Gauge gauge = Gauge::unit_field);

/// Inverse map with c_eff = 1: OmegaTilde = 1 / (2 eta Delta). The momentum
/// therefore carries over unchanged. Throws magnetic_field_unsupported when B != 0.
TrapParams trap_from_dirac(const DiracParams& d, double eta = 1.0, double Delta = 1.0);

/// 2 delta (sz^{ad} + sz^{bc})
/// + 2 eta Delta OmegaTilde [(sx^{ad} + sx^{bc}) p_x + (sy^{ad} - sy^{bc}) p_y + (sx^{ac} - sx^{bd}) p_z]
/// + 2 Omega1 . [(sx^{ab} - sx^{cd}), (sy^{ab} - sy^{cd}), (sz^{ab} - sz^{cd})]
/// + 2 Omega2 . [(-sy^{ad} - sy^{bc}), (sx^{ad} - sx^{bc}), (sy^{bd} - sy^{ac})]
Mat4 assemble_mapped_hamiltonian(const TrapParams& tp, const Vec3& p_trap);

/// (F bit, M bit): a -> (0,0), b -> (0,1), c -> (1,0), d -> (1,1).
std::pair<int, int> qubit_index(IonicLabel label);

}  // namespace dirac_trap::trapmap
