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

#include "dirac_trap/dirac.hpp"

#include <cmath>

#include "dirac_trap/error.hpp"

namespace dirac_trap::dirac {

using linalg::Complex;
using linalg::kI;
using linalg::kron;
using linalg::Mat2;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

DiracParams PlanarConfig::to_params() const {
  if (!(p >= 0.0) || !(eps >= 0.0)) throw Error(ErrorCode::invalid_params, "planar p and eps must be >= 0");
  DiracParams d;
  d.m = m;
  d.p = {p, 0.0, 0.0};
  d.kappa = kappa;
  d.mu = mu;
  d.E = {eps * std::cos(theta), eps * std::sin(theta), 0.0};
  return d;
}

const DiracMatrices& dirac_matrices() {
  static const DiracMatrices matrices = [] {
    const auto sigma = linalg::pauli_vector();
    const Mat2 id = Mat2::identity();
    DiracMatrices dm;
    for (std::size_t i = 0; i < 3; ++i) {
      dm.alpha[i] = kron(linalg::pauli_x(), sigma[i]);
      dm.Sigma[i] = kron(id, sigma[i]);
    }
    dm.beta = kron(linalg::pauli_z(), id);
    dm.gamma5 = kron(linalg::pauli_x(), id);
    return dm;
  }();
  return matrices;
}

Mat4 gamma5(Gamma5Form form) {
  if (form == Gamma5Form::dirac) return dirac_matrices().gamma5;
  Mat4 g;
  g(0, 3) = g(3, 0) = 1.0;
  g(1, 2) = g(2, 1) = 1.0;
  return g;
}

namespace {

Mat4 dot_matrices(const std::array<Mat4, 3>& ops, const Vec3& v) {
  Mat4 out;
  for (std::size_t i = 0; i < 3; ++i)
    if (v[i] != 0.0) out += v[i] * ops[i];
  return out;
}

bool finite(const Vec3& v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

void require_no_magnetic_field(const DiracParams& params, const char* where) {
  if (params.has_magnetic_field())
    throw Error(ErrorCode::magnetic_field_unsupported, std::string(where) + " requires B = 0");
}

}  // namespace

void validate(const DiracParams& params) {
  if (!std::isfinite(params.m) || !std::isfinite(params.kappa) || !std::isfinite(params.mu) || !finite(params.p) ||
      !finite(params.E) || !finite(params.B))
    throw Error(ErrorCode::invalid_params, "Dirac parameters must be finite");
  if (params.m < 0.0) throw Error(ErrorCode::invalid_params, "mass must be >= 0");
}

Mat4 hamiltonian(const DiracParams& params) {
  validate(params);
  const DiracMatrices& dm = dirac_matrices();
  const Mat4 alpha_p = dot_matrices(dm.alpha, params.p);
  const Mat4 sigma_e = dot_matrices(dm.Sigma, params.E);
  const Mat4 alpha_e = dot_matrices(dm.alpha, params.E);
  const Mat4 sigma_b = dot_matrices(dm.Sigma, params.B);
  const Mat4 alpha_b = dot_matrices(dm.alpha, params.B);

  Mat4 h = alpha_p + params.m * dm.beta;
  h += params.kappa * (dm.beta * (sigma_e + kI * alpha_b));
  h += params.mu * (dm.beta * (kI * alpha_e - sigma_b));
  return h;
}

Mat4 o_operator(const DiracParams& params) {
  validate(params);
  require_no_magnetic_field(params, "o_operator");
  const DiracMatrices& dm = dirac_matrices();
  const Vec3 pxe = cross(params.p, params.E);
  Mat4 o = (params.m * params.kappa) * dot_matrices(dm.Sigma, params.E);
  o += params.mu * (dm.beta * dot_matrices(dm.Sigma, pxe));
  o += Complex(0.0, -params.kappa) * (dm.beta * dot_matrices(dm.alpha, pxe));
  return o;
}

Invariants invariants(const DiracParams& params) {
  validate(params);
  require_no_magnetic_field(params, "invariants");
  const double p2 = dot(params.p, params.p);
  const double e2 = dot(params.E, params.E);
  const Vec3 pxe = cross(params.p, params.E);
  const double k2 = params.kappa * params.kappa;
  const double mu2 = params.mu * params.mu;
  const double m2 = params.m * params.m;
  return {p2 + m2 + (k2 + mu2) * e2, m2 * k2 * e2 + (mu2 + k2) * dot(pxe, pxe)};
}

Invariants invariants_from_traces(const Mat4& h) {
  const Mat4 h2 = h * h;
  const double g1 = std::real(linalg::trace(h2)) / 4.0;
  const Mat4 shifted = h2 - g1 * Mat4::identity();
  const double g2 = std::real(linalg::trace(shifted * shifted)) / 16.0;
  return {g1, g2};
}

double spectral_gap_discriminant(const DiracParams& params) {
  validate(params);
  require_no_magnetic_field(params, "spectral_gap_discriminant");
  const double p2 = dot(params.p, params.p);
  const double e2 = dot(params.E, params.E);
  const double km2 = params.kappa * params.kappa + params.mu * params.mu;
  const double pe = dot(params.p, params.E);
  const double first = p2 + params.m * params.m - km2 * e2;
  return first * first + 4.0 * params.m * params.m * params.mu * params.mu * e2 + 4.0 * km2 * pe * pe;
}

}  // namespace dirac_trap::dirac
