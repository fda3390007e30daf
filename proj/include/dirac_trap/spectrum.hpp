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

// Stationary pure states of the electrostatic Dirac Hamiltonian, built from
// the g1/g2 operator algebra:
//
//   rho_{n,s} = 1/4 (I + (-1)^s O / sqrt(g2)) (I + (-1)^n H / |lambda_{n,s}|)
//   lambda_{n,s} = (-1)^n sqrt(g1 + 2 (-1)^s sqrt(g2))
//
// and the unitary M whose columns are those states in the ionic basis.

#include <array>
#include <optional>

#include "dirac_trap/dirac.hpp"
#include "dirac_trap/linalg.hpp"

namespace dirac_trap::spectrum {

using dirac::DiracParams;
using dirac::PlanarConfig;
using linalg::Complex;
using linalg::Mat4;
using linalg::Vec3;
using linalg::Vec4;

/// Below this g2 (natural units) the ansatz is declared degenerate.
inline constexpr double kG2Floor = 1e-20;
/// Moduli below this are not used to define relative phases.
inline constexpr double kPhaseFloor = 1e-12;
/// |lambda| <= kLambdaFloor * sqrt(g1) is treated as a zero eigenvalue.
inline constexpr double kLambdaFloor = 1e-12;

/// n picks the sign of lambda, s picks the +-sqrt(g2) branch.
struct ModeIndex {
  int n = 0;
  int s = 0;

  /// Column of M: (0,0),(0,1),(1,0),(1,1) -> 0..3.
  constexpr std::size_t column() const { return static_cast<std::size_t>(2 * n + s); }
  static constexpr ModeIndex from_column(std::size_t c) { return {static_cast<int>(c / 2), static_cast<int>(c % 2)}; }
  friend constexpr bool operator==(ModeIndex, ModeIndex) = default;
};

inline constexpr std::array<ModeIndex, 4> kAllModes{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

double eigenvalue(const DiracParams& params, ModeIndex mode);

/// Pure eigen-density from the ansatz. Throws degenerate_invariant when
/// g2 <= kG2Floor and zero_eigenvalue when |lambda| hits the floor.
Mat4 eigen_density(const DiracParams& params, ModeIndex mode);

struct Coefficients {
  std::array<double, 4> moduli{};                 // |M^a|..|M^d|
  std::array<std::optional<Complex>, 3> phases;   // e^{-i dphi^{ab}}, e^{-i dphi^{ac}}, e^{-i dphi^{ad}}
  Vec4 state{};                                   // column of M with the global phase fixed
  std::size_t anchor = 0;                         // component carrying the real positive amplitude
};

/// |M^i| = sqrt(rho_ii) and e^{-i dphi^{ai}} = rho_ia / (|M^a||M^i|).
/// A phase is left empty when either modulus is below kPhaseFloor. The
/// anchor is a unless |M^a| is below the floor, then the first
/// above-floor component in basis order.
Coefficients coefficients_from_density(const Mat4& rho);

Coefficients coefficients(const DiracParams& params, ModeIndex mode);

/// Planar closed forms for the moduli (corrected b, c, d cross terms) and
/// the three relative phases. Phases whose moduli fall below kPhaseFloor are
/// left empty.
struct PlanarCoefficients {
  std::array<double, 4> moduli{};
  std::array<std::optional<Complex>, 3> phases;
};
PlanarCoefficients planar_coefficients(const PlanarConfig& cfg, ModeIndex mode);

enum class Fallback { none, oracle };

struct EigenSystem {
  DiracParams params;
  std::array<double, 4> lambdas{};  // indexed by ModeIndex::column()
  std::array<Mat4, 4> rhos;
  Mat4 M;  // columns are eigenstates in the ionic basis
  Mat4 W;  // M^{-1} = M^dagger; W(col, j) = W^j_{n,s}
  bool degenerate = false;

  double lambda(ModeIndex mode) const { return lambdas[mode.column()]; }
};

/// With Fallback::oracle a degenerate g2 is handled by hermitian_eig instead
/// of throwing; the result is flagged degenerate.
EigenSystem eigensystem(const DiracParams& params, Fallback fallback = Fallback::none);

struct FreeBispinor {
  int s = 0;
  Vec3 p{};
  std::array<Complex, 2> spinor{};
  Vec4 state{};
  double Ep = 0.0;
  double Ns = 0.0;
};

/// N_s [ |+> (x) |u> + p/(E_p + (-1)^{s+1} m) |-> (x) (p^.sigma)|u> ], with
/// |+>,|-> the first-qubit basis. The time phase is left to the caller.
FreeBispinor free_bispinor(double m, const Vec3& p, int s, const std::array<Complex, 2>& spinor);

}  // namespace dirac_trap::spectrum
