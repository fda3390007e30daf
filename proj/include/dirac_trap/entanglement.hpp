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

// Two-qubit correlations of pure ionic states. Qubit 1 is the first
// Kronecker factor (parity / F label), qubit 2 the second (spin / M label).

#include <span>
#include <vector>

#include "dirac_trap/dirac.hpp"
#include "dirac_trap/dynamics.hpp"
#include "dirac_trap/linalg.hpp"
#include "dirac_trap/spectrum.hpp"

namespace dirac_trap::entanglement {

using dirac::Gamma5Form;
using dirac::PlanarConfig;
using linalg::Mat4;
using linalg::Vec3;
using linalg::Vec4;
using spectrum::ModeIndex;

/// Tolerance on |Tr rho^2 - 1| (or | ||psi||^2 - 1 |) for the purity check.
inline constexpr double kPurityTol = 1e-10;

struct BlochPair {
  Vec3 a1{};  // Tr[(sigma (x) I) rho]
  Vec3 a2{};  // Tr[(I (x) sigma) rho]
};

/// Throws not_pure if the purity check fails.
BlochPair bloch_vectors(const Mat4& rho);
BlochPair bloch_vectors(const Vec4& state);

/// sqrt(1 - |a2|^2), clamped.
double concurrence(const Mat4& rho);
double concurrence(const Vec4& state);

/// 2 sqrt(det Tr_1 rho), an independent route to the same number.
double concurrence_from_reduced_det(const Mat4& rho);

/// Von Neumann entropy of the reduced state in bits.
double entropy(const Mat4& rho);
double entropy(const Vec4& state);

/// Binary entropy h(x) in bits, with 0 log 0 = 0.
double binary_entropy(double x);

/// a2 = (-1)^s m / sqrt(g2) [kappa E + (-1)^n mu (p x E) / |lambda|].
/// Requires B = 0 and g2 above the floor.
Vec3 bloch_eigen_closed(const dirac::DiracParams& params, ModeIndex mode);

/// |a2|^2 = m^2 [kappa^2 + mu^2 p^2 sin^2 / lambda^2] / (m^2 kappa^2 + (mu^2+kappa^2) p^2 sin^2)
/// followed by C = sqrt(1 - |a2|^2). Throws degenerate_invariant below the floor.
double concurrence_eigen_closed(const PlanarConfig& cfg, ModeIndex mode);

/// Tr[gamma5 rho] for either operator form.
double chirality(const Mat4& rho, Gamma5Form form);
double chirality(const Vec4& state, Gamma5Form form);

/// (-1)^{n+s} m p kappa cos / (|lambda| sqrt(m^2 kappa^2 + (mu^2+kappa^2) p^2 sin^2)),
/// the Dirac-form chirality of an eigenstate.
double chirality_eigen_closed(const PlanarConfig& cfg, ModeIndex mode);

/// P_ad = |<a|+<d|)psi|^2 / 2, P_cb = |(<c|+<b|)psi|^2 / 2.
struct SuperpositionProbabilities {
  double P_ad = 0.0;
  double P_cb = 0.0;
};
SuperpositionProbabilities superposition_probabilities(const Vec4& state);

struct CorrelationReport {
  double concurrence = 0.0;
  double entropy = 0.0;
  double chirality = 0.0;  // ionic pair form, equals 2 (P_ad + P_cb) - 1
  double P_ad = 0.0;
  double P_cb = 0.0;
  double chirality_dirac = 0.0;  // sigma_x (x) I form
};

CorrelationReport correlation_report(const Vec4& state);

struct CorrelationSeries {
  std::vector<double> t_grid;
  std::vector<CorrelationReport> reports;
};

/// Reports for |j(t)> over `t`. The amplitude synthesis and pair observables
/// go through the kernel layer; entropy and the Dirac-form chirality are
/// evaluated per point.
CorrelationSeries correlation_series(const spectrum::EigenSystem& sys, dynamics::IonicLabel j,
                                     std::span<const double> t, kernels::Isa isa = kernels::detected_isa());

}  // namespace dirac_trap::entanglement
