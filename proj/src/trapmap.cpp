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

#include "dirac_trap/trapmap.hpp"

#include <algorithm>
#include <cmath>

#include "dirac_trap/error.hpp"

namespace dirac_trap::trapmap {

using dynamics::index_of;
using linalg::Complex;

namespace {

constexpr double kParallelTol = 1e-12;

bool finite(const Vec3& v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

double norm(const Vec3& v) { return std::sqrt(dirac::dot(v, v)); }

Mat4 op(IonicLabel i, IonicLabel j, Axis axis) { return sigma_pair(i, j, axis).matrix; }

}  // namespace

TrapParams TrapParams::from_raw(const RawTrap& raw, double OmegaTilde, double delta_det, const Vec3& Omega1,
                                const Vec3& Omega2) {
  if (!(raw.nu > 0.0) || !(raw.ion_mass > 0.0) || !std::isfinite(raw.nu) || !std::isfinite(raw.ion_mass) ||
      !std::isfinite(raw.k))
    throw Error(ErrorCode::invalid_params, "trap frequency and ion mass must be finite and > 0");
  TrapParams tp;
  tp.Delta = std::sqrt(1.0 / (2.0 * raw.ion_mass * raw.nu));
  tp.eta = raw.k * tp.Delta;
  tp.OmegaTilde = OmegaTilde;
  tp.delta_det = delta_det;
  tp.Omega1 = Omega1;
  tp.Omega2 = Omega2;
  tp.raw = raw;
  validate(tp);
  return tp;
}

void validate(const TrapParams& tp) {
  for (double x : {tp.eta, tp.Delta, tp.OmegaTilde, tp.delta_det})
    if (!std::isfinite(x) || x < 0.0) throw Error(ErrorCode::invalid_params, "trap scalars must be finite and >= 0");
  if (!finite(tp.Omega1) || !finite(tp.Omega2))
    throw Error(ErrorCode::invalid_params, "carrier frequencies must be finite");
}

PauliPairOp sigma_pair(IonicLabel first, IonicLabel second, Axis axis) {
  if (first == second) throw Error(ErrorCode::invalid_pair, "sigma_pair needs two distinct levels");
  if (index_of(second) < index_of(first)) std::swap(first, second);
  const std::size_t i = index_of(first);
  const std::size_t j = index_of(second);

  PauliPairOp out;
  out.levels = {first, second};
  out.axis = axis;
  switch (axis) {
    case Axis::x:
      out.matrix(i, j) = 1.0;
      out.matrix(j, i) = 1.0;
      break;
    case Axis::y:
      out.matrix(i, j) = Complex(0.0, -1.0);
      out.matrix(j, i) = Complex(0.0, 1.0);
      break;
    case Axis::z:
      out.matrix(i, i) = 1.0;
      out.matrix(j, j) = -1.0;
      break;
  }
  return out;
}

DiracParams dirac_from_trap(const TrapParams& tp, const Vec3& p_trap, Gauge gauge) {
  validate(tp);
  if (!finite(p_trap)) throw Error(ErrorCode::invalid_params, "momentum must be finite");
  const double c = tp.c_eff();
  if (!(c > 0.0)) throw Error(ErrorCode::zero_coupling, "eta * Delta * OmegaTilde must be > 0");

  const double n1 = norm(tp.Omega1);
  const double n2 = norm(tp.Omega2);
  if (norm(dirac::cross(tp.Omega1, tp.Omega2)) > kParallelTol * n1 * n2)
    throw Error(ErrorCode::invalid_params, "Omega1 and Omega2 must be parallel (they share the field direction)");

  DiracParams d;
  d.m = 2.0 * tp.delta_det;
  for (std::size_t i = 0; i < 3; ++i) d.p[i] = c * p_trap[i];

  if (gauge == Gauge::kappa_eq_mu) {
    for (std::size_t i = 0; i < 3; ++i)
      if (std::abs(tp.Omega1[i] - tp.Omega2[i]) > kParallelTol * std::max(n1, n2))
        throw Error(ErrorCode::invalid_params, "kappa_eq_mu gauge needs Omega1 == Omega2");
    d.kappa = 1.0;
    d.mu = 1.0;
    for (std::size_t i = 0; i < 3; ++i) d.E[i] = 2.0 * tp.Omega1[i];
    return d;
  }

  if (n1 == 0.0 && n2 == 0.0) return d;
  const Vec3& along = (n1 > 0.0) ? tp.Omega1 : tp.Omega2;
  const double n = (n1 > 0.0) ? n1 : n2;
  const Vec3 u{along[0] / n, along[1] / n, along[2] / n};
  d.E = u;
  d.kappa = 2.0 * dirac::dot(tp.Omega1, u);
  d.mu = 2.0 * dirac::dot(tp.Omega2, u);
  return d;
}

TrapParams trap_from_dirac(const DiracParams& d, double eta, double Delta) {
  dirac::validate(d);
  if (d.has_magnetic_field()) throw Error(ErrorCode::magnetic_field_unsupported, "the trap map carries no B field");
  if (!(d.m >= 0.0)) throw Error(ErrorCode::invalid_params, "mass must be >= 0 (detuning is non-negative)");
  if (!(eta > 0.0) || !(Delta > 0.0) || !std::isfinite(eta) || !std::isfinite(Delta))
    throw Error(ErrorCode::invalid_params, "eta and Delta must be finite and > 0");

  TrapParams tp;
  tp.eta = eta;
  tp.Delta = Delta;
  tp.OmegaTilde = 1.0 / (2.0 * eta * Delta);
  tp.delta_det = 0.5 * d.m;
  for (std::size_t i = 0; i < 3; ++i) {
    tp.Omega1[i] = 0.5 * d.kappa * d.E[i];
    tp.Omega2[i] = 0.5 * d.mu * d.E[i];
  }
  return tp;
}

Mat4 assemble_mapped_hamiltonian(const TrapParams& tp, const Vec3& p_trap) {
  validate(tp);
  using enum IonicLabel;
  Mat4 h = (2.0 * tp.delta_det) * (op(a, d, Axis::z) + op(b, c, Axis::z));

  const double speed = tp.c_eff();
  h += (speed * p_trap[0]) * (op(a, d, Axis::x) + op(b, c, Axis::x));
  h += (speed * p_trap[1]) * (op(a, d, Axis::y) - op(b, c, Axis::y));
  h += (speed * p_trap[2]) * (op(a, c, Axis::x) - op(b, d, Axis::x));

  h += (2.0 * tp.Omega1[0]) * (op(a, b, Axis::x) - op(c, d, Axis::x));
  h += (2.0 * tp.Omega1[1]) * (op(a, b, Axis::y) - op(c, d, Axis::y));
  h += (2.0 * tp.Omega1[2]) * (op(a, b, Axis::z) - op(c, d, Axis::z));

  h += (2.0 * tp.Omega2[0]) * (Mat4{} - op(a, d, Axis::y) - op(b, c, Axis::y));
  h += (2.0 * tp.Omega2[1]) * (op(a, d, Axis::x) - op(b, c, Axis::x));
  h += (2.0 * tp.Omega2[2]) * (op(b, d, Axis::y) - op(a, c, Axis::y));
  return h;
}

std::pair<int, int> qubit_index(IonicLabel label) {
  const auto i = static_cast<int>(index_of(label));
  return {i >> 1, i & 1};
}

}  // namespace dirac_trap::trapmap
