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

#include "dirac_trap/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirac_trap/error.hpp"

namespace dirac_trap::entanglement {

using linalg::Complex;
using linalg::Mat2;

namespace {

void require_pure(const Mat4& rho) {
  const double purity = std::real(linalg::trace(rho * rho));
  if (std::abs(purity - 1.0) > kPurityTol)
    throw Error(ErrorCode::not_pure, "Tr rho^2 = " + std::to_string(purity));
}

void require_normalised(const Vec4& state) {
  const double n2 = std::real(linalg::inner(state, state));
  if (std::abs(n2 - 1.0) > kPurityTol) throw Error(ErrorCode::not_pure, "|psi|^2 = " + std::to_string(n2));
}

Vec3 bloch(const Mat2& reduced) {
  const auto sigma = linalg::pauli_vector();
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = std::real(linalg::trace(sigma[i] * reduced));
  return out;
}

double norm2(const Vec3& v) { return dirac::dot(v, v); }

double sqrt_clamped(double x) { return std::sqrt(std::max(0.0, x)); }

// g2 and |lambda| shared by the planar closed forms.
struct PlanarScalars {
  double q = 0.0;  // g2 / eps^2
  double abs_lambda = 0.0;
};

PlanarScalars planar_scalars(const PlanarConfig& cfg, ModeIndex mode) {
  const dirac::DiracParams params = cfg.to_params();
  const dirac::Invariants inv = dirac::invariants(params);
  if (!(inv.g2 > spectrum::kG2Floor)) throw Error(ErrorCode::degenerate_invariant, "degenerate g2 in planar closed form");
  const double st = std::sin(cfg.theta);
  PlanarScalars out;
  out.q = cfg.m * cfg.m * cfg.kappa * cfg.kappa + (cfg.mu * cfg.mu + cfg.kappa * cfg.kappa) * cfg.p * cfg.p * st * st;
  out.abs_lambda = std::abs(spectrum::eigenvalue(params, mode));
  return out;
}

}  // namespace

BlochPair bloch_vectors(const Mat4& rho) {
  require_pure(rho);
  return {bloch(linalg::partial_trace(rho, linalg::TraceOut::second)),
          bloch(linalg::partial_trace(rho, linalg::TraceOut::first))};
}

BlochPair bloch_vectors(const Vec4& state) {
  require_normalised(state);
  return bloch_vectors(linalg::outer(state, state));
}

double concurrence(const Mat4& rho) { return std::min(1.0, sqrt_clamped(1.0 - norm2(bloch_vectors(rho).a2))); }

double concurrence(const Vec4& state) {
  require_normalised(state);
  return concurrence(linalg::outer(state, state));
}

double concurrence_from_reduced_det(const Mat4& rho) {
  require_pure(rho);
  const Mat2 r = linalg::partial_trace(rho, linalg::TraceOut::first);
  const double det = std::real(r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0));
  return std::min(1.0, 2.0 * sqrt_clamped(det));
}

double binary_entropy(double x) {
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double entropy(const Mat4& rho) {
  require_pure(rho);
  const Mat2 r = linalg::partial_trace(rho, linalg::TraceOut::first);
  const double mean = 0.5 * std::real(r(0, 0) + r(1, 1));
  const double half_diff = 0.5 * std::real(r(0, 0) - r(1, 1));
  const double spread = std::sqrt(half_diff * half_diff + std::norm(r(0, 1)));
  return binary_entropy(std::clamp(mean + spread, 0.0, 1.0));
}

double entropy(const Vec4& state) {
  require_normalised(state);
  return entropy(linalg::outer(state, state));
}

Vec3 bloch_eigen_closed(const dirac::DiracParams& params, ModeIndex mode) {
  const dirac::Invariants inv = dirac::invariants(params);
  if (!(inv.g2 > spectrum::kG2Floor)) throw Error(ErrorCode::degenerate_invariant, "degenerate g2 in Bloch closed form");
  const double abs_lambda = std::abs(spectrum::eigenvalue(params, mode));
  const double S = (mode.s == 0) ? 1.0 : -1.0;
  const double N = (mode.n == 0) ? 1.0 : -1.0;
  const Vec3 pxe = dirac::cross(params.p, params.E);
  const double pre = S * params.m / std::sqrt(inv.g2);
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i)
    out[i] = pre * (params.kappa * params.E[i] + N * params.mu * pxe[i] / abs_lambda);
  return out;
}

double concurrence_eigen_closed(const PlanarConfig& cfg, ModeIndex mode) {
  const PlanarScalars ps = planar_scalars(cfg, mode);
  const double st = std::sin(cfg.theta);
  const double l2 = ps.abs_lambda * ps.abs_lambda;
  const double a2 =
      cfg.m * cfg.m * (cfg.kappa * cfg.kappa + cfg.mu * cfg.mu * cfg.p * cfg.p * st * st / l2) / ps.q;
  return std::min(1.0, sqrt_clamped(1.0 - a2));
}

double chirality(const Mat4& rho, Gamma5Form form) { return std::real(linalg::trace(dirac::gamma5(form) * rho)); }

double chirality(const Vec4& state, Gamma5Form form) {
  return std::real(linalg::inner(state, dirac::gamma5(form) * state));
}

double chirality_eigen_closed(const PlanarConfig& cfg, ModeIndex mode) {
  const PlanarScalars ps = planar_scalars(cfg, mode);
  const double sign = ((mode.n + mode.s) % 2 == 0) ? 1.0 : -1.0;
  return sign * cfg.m * cfg.p * cfg.kappa * std::cos(cfg.theta) / (ps.abs_lambda * std::sqrt(ps.q));
}

SuperpositionProbabilities superposition_probabilities(const Vec4& state) {
  return {std::clamp(0.5 * std::norm(state[0] + state[3]), 0.0, 1.0),
          std::clamp(0.5 * std::norm(state[2] + state[1]), 0.0, 1.0)};
}

CorrelationReport correlation_report(const Vec4& state) {
  CorrelationReport r;
  r.concurrence = concurrence(state);
  r.entropy = entropy(state);
  r.chirality = chirality(state, Gamma5Form::ionic_pairs);
  const SuperpositionProbabilities sp = superposition_probabilities(state);
  r.P_ad = sp.P_ad;
  r.P_cb = sp.P_cb;
  r.chirality_dirac = chirality(state, Gamma5Form::dirac);
  return r;
}

CorrelationSeries correlation_series(const spectrum::EigenSystem& sys, dynamics::IonicLabel j,
                                     std::span<const double> t, kernels::Isa isa) {
  const dynamics::AmplitudeSeries series = dynamics::propagate(sys, j, t, isa);
  kernels::PairObservables pairs;
  kernels::pair_observables(isa, series.amps, pairs);

  CorrelationSeries out;
  out.t_grid = series.t;
  out.reports.resize(series.t.size());
  for (std::size_t i = 0; i < series.t.size(); ++i) {
    CorrelationReport& r = out.reports[i];
    r.concurrence = std::min(1.0, pairs.concurrence[i]);
    r.entropy = binary_entropy(0.5 * (1.0 + sqrt_clamped(1.0 - r.concurrence * r.concurrence)));
    r.chirality = pairs.pair_chirality[i];
    r.P_ad = std::min(1.0, pairs.P_ad[i]);
    r.P_cb = std::min(1.0, pairs.P_cb[i]);
    const Vec4 psi = series.at(i);
    r.chirality_dirac = 2.0 * std::real(std::conj(psi[0]) * psi[2] + std::conj(psi[1]) * psi[3]);
  }
  return out;
}

}  // namespace dirac_trap::entanglement
