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

#include "dirac_trap/spectrum.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "dirac_trap/error.hpp"

namespace dirac_trap::spectrum {

namespace {

double sign_of(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void check_mode(ModeIndex mode) {
  if ((mode.n != 0 && mode.n != 1) || (mode.s != 0 && mode.s != 1))
    throw Error(ErrorCode::invalid_params, "mode indices must be 0 or 1");
}

// Squared |lambda_{n,s}|. The s = 1 branch uses (g1^2 - 4 g2) / (g1 + 2 sqrt g2)
// with the numerator as a sum of squares, so it never cancels catastrophically.
double lambda_squared(const DiracParams& params, const dirac::Invariants& inv, int s) {
  const double root = std::sqrt(inv.g2);
  const double upper = inv.g1 + 2.0 * root;
  if (!std::isfinite(upper) || upper < 0.0)
    throw Error(ErrorCode::complex_eigenvalue, "negative radicand in lambda_{n,s}");
  if (s == 0) return upper;
  if (upper == 0.0) return 0.0;
  return dirac::spectral_gap_discriminant(params) / upper;
}

double clamp_unit_radicand(double x) { return x > 0.0 ? x : 0.0; }

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

double eigenvalue(const DiracParams& params, ModeIndex mode) {
  check_mode(mode);
  const dirac::Invariants inv = dirac::invariants(params);
  return sign_of(mode.n) * std::sqrt(lambda_squared(params, inv, mode.s));
}

Mat4 eigen_density(const DiracParams& params, ModeIndex mode) {
  check_mode(mode);
  const dirac::Invariants inv = dirac::invariants(params);
  if (!(inv.g2 > kG2Floor))
    throw Error(ErrorCode::degenerate_invariant,
                "degenerate g2 = " + shortest(inv.g2) + " (field-free or aligned configuration)");
  const double abs_lambda = std::sqrt(lambda_squared(params, inv, mode.s));
  if (abs_lambda <= kLambdaFloor * std::sqrt(inv.g1))
    throw Error(ErrorCode::zero_eigenvalue, "lambda_{n,s} vanishes for these parameters");

  const Mat4 id = Mat4::identity();
  const Mat4 left = id + (sign_of(mode.s) / std::sqrt(inv.g2)) * dirac::o_operator(params);
  const Mat4 right = id + (sign_of(mode.n) / abs_lambda) * dirac::hamiltonian(params);
  const Mat4 rho = 0.25 * (left * right);
  return 0.5 * (rho + linalg::adjoint(rho));
}

Coefficients coefficients_from_density(const Mat4& rho) {
  Coefficients out;
  for (std::size_t i = 0; i < 4; ++i) out.moduli[i] = std::sqrt(clamp_unit_radicand(std::real(rho(i, i))));

  out.anchor = 0;
  while (out.anchor < 3 && out.moduli[out.anchor] <= kPhaseFloor) ++out.anchor;

  // Read the state off the best-conditioned column, then rotate the global
  // phase so the anchor component is real and positive.
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (out.moduli[i] > out.moduli[pivot]) pivot = i;
  for (std::size_t i = 0; i < 4; ++i) out.state[i] = rho(i, pivot) / out.moduli[pivot];
  out.state[pivot] = out.moduli[pivot];
  const Complex anchor_value = out.state[out.anchor];
  const Complex unphase = std::conj(anchor_value) / std::abs(anchor_value);
  const double nrm = linalg::norm(out.state);
  for (auto& x : out.state) x *= unphase / nrm;
  out.state[out.anchor] = std::real(out.state[out.anchor]);

  if (out.moduli[0] > kPhaseFloor) {
    for (std::size_t i = 1; i < 4; ++i)
      if (out.moduli[i] > kPhaseFloor) out.phases[i - 1] = rho(i, 0) / (out.moduli[0] * out.moduli[i]);
  }
  return out;
}

Coefficients coefficients(const DiracParams& params, ModeIndex mode) {
  return coefficients_from_density(eigen_density(params, mode));
}

PlanarCoefficients planar_coefficients(const PlanarConfig& cfg, ModeIndex mode) {
  check_mode(mode);
  const DiracParams params = cfg.to_params();
  const dirac::Invariants inv = dirac::invariants(params);
  if (!(inv.g2 > kG2Floor)) throw Error(ErrorCode::degenerate_invariant, "degenerate g2 in planar closed form");

  const double lam = std::abs(eigenvalue(params, mode));
  const double sg = std::sqrt(inv.g2);
  const double N = sign_of(mode.n);
  const double S = sign_of(mode.s);
  const double st = std::sin(cfg.theta);
  const double m = cfg.m;
  const double p = cfg.p;
  const double eps = cfg.eps;
  const double k2e2 = cfg.kappa * cfg.kappa * eps * eps;
  const double mupe = cfg.mu * p * eps * st;

  // diag(rho) = 1/4 [1 + N H_ii/|l| + S O_ii/sg + N S (OH)_ii/(sg |l|)]
  // H_ii = m (1,1,-1,-1), O_ii = mu p eps sin (1,-1,-1,1),
  // (OH)_ii = m (k2e2 + mupe, k2e2 - mupe, -k2e2 + mupe, -k2e2 - mupe).
  const double A = N * m / lam;
  const double B = S * mupe / sg;
  const double X = N * S * m / (sg * lam);

  PlanarCoefficients out;
  out.moduli[0] = 0.5 * std::sqrt(clamp_unit_radicand(1.0 + A + B + X * (k2e2 + mupe)));
  out.moduli[1] = 0.5 * std::sqrt(clamp_unit_radicand(1.0 + A - B + X * (k2e2 - mupe)));
  out.moduli[2] = 0.5 * std::sqrt(clamp_unit_radicand(1.0 - A - B + X * (-k2e2 + mupe)));
  out.moduli[3] = 0.5 * std::sqrt(clamp_unit_radicand(1.0 - A + B - X * (k2e2 + mupe)));

  const double ma = out.moduli[0];
  if (ma <= kPhaseFloor) return out;

  const Complex e_it = std::polar(1.0, cfg.theta);
  const Complex i1{0.0, 1.0};
  const Complex mu_e_ip = cfg.mu * eps * e_it + i1 * p;  // mu eps e^{i theta} + i p

  if (out.moduli[1] > kPhaseFloor) {
    const Complex bracket = N * e_it / lam + S * m * e_it / sg +
                            N * S * (p * st * mu_e_ip + e_it * (m * m - mupe)) / (sg * lam);
    out.phases[0] = cfg.kappa * eps / (4.0 * ma * out.moduli[1]) * bracket;
  }
  if (out.moduli[2] > kPhaseFloor) {
    const Complex bracket = S * p * st + N * S * m * (p * st - std::conj(e_it) * mu_e_ip) / lam;
    out.phases[1] = i1 * cfg.kappa * eps / (4.0 * sg * ma * out.moduli[2]) * bracket;
  }
  if (out.moduli[3] > kPhaseFloor) {
    const Complex bracket = N * mu_e_ip + N * S * (p * k2e2 * st * e_it + eps * p * cfg.mu * st * mu_e_ip) / sg;
    out.phases[2] = -i1 / (4.0 * lam * ma * out.moduli[3]) * bracket;
  }
  return out;
}

EigenSystem eigensystem(const DiracParams& params, Fallback fallback) {
  EigenSystem sys;
  sys.params = params;
  const dirac::Invariants inv = dirac::invariants(params);

  if (inv.g2 > kG2Floor) {
    for (ModeIndex mode : kAllModes) {
      const std::size_t c = mode.column();
      sys.lambdas[c] = eigenvalue(params, mode);
      sys.rhos[c] = eigen_density(params, mode);
      const Vec4 v = coefficients_from_density(sys.rhos[c]).state;
      for (std::size_t i = 0; i < 4; ++i) sys.M(i, c) = v[i];
    }
  } else {
    if (fallback == Fallback::none)
      throw Error(ErrorCode::degenerate_invariant,
                  "degenerate g2 = " + shortest(inv.g2) + "; the oracle fallback is required");
    sys.degenerate = true;
    const linalg::EigDecomp eig = linalg::hermitian_eig(dirac::hamiltonian(params));
    // ascending e0..e3 -> (1,0), (1,1), (0,1), (0,0)
    constexpr std::array<std::size_t, 4> column_of_ascending{2, 3, 1, 0};
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t c = column_of_ascending[k];
      sys.lambdas[c] = eig.eigenvalues[k];
      const Coefficients coef = coefficients_from_density(linalg::outer(eig.eigenvectors[k], eig.eigenvectors[k]));
      sys.rhos[c] = linalg::outer(coef.state, coef.state);
      for (std::size_t i = 0; i < 4; ++i) sys.M(i, c) = coef.state[i];
    }
  }
  sys.W = linalg::adjoint(sys.M);
  return sys;
}

FreeBispinor free_bispinor(double m, const Vec3& p, int s, const std::array<Complex, 2>& spinor) {
  if (s != 0 && s != 1) throw Error(ErrorCode::invalid_params, "s must be 0 or 1");
  if (!(m >= 0.0) || !std::isfinite(m)) throw Error(ErrorCode::invalid_params, "mass must be finite and >= 0");
  const double spinor_norm = std::sqrt(std::norm(spinor[0]) + std::norm(spinor[1]));
  if (std::abs(spinor_norm - 1.0) > 1e-12) throw Error(ErrorCode::invalid_params, "spinor must be normalised");

  FreeBispinor out;
  out.s = s;
  out.p = p;
  out.spinor = spinor;
  const double pmag = std::sqrt(dirac::dot(p, p));
  out.Ep = std::sqrt(pmag * pmag + m * m);
  if (!(out.Ep > 0.0)) throw Error(ErrorCode::invalid_params, "free bispinor needs E_p > 0");

  // E_p -/+ m without cancellation: E_p - m = p^2 / (E_p + m).
  const double e_plus_m = out.Ep + m;
  const double e_minus_m = pmag * pmag / e_plus_m;
  out.Ns = std::sqrt(0.5 * (s == 0 ? e_minus_m : e_plus_m) / out.Ep);
  // N_s * p / (E_p + (-1)^{s+1} m), finite at p -> 0.
  const double lower = std::sqrt(0.5 * (s == 0 ? e_plus_m : e_minus_m) / out.Ep);

  std::array<Complex, 2> rotated{};
  if (lower != 0.0) {
    if (pmag == 0.0) throw Error(ErrorCode::invalid_params, "direction of p is undefined at p = 0");
    const Vec3 n{p[0] / pmag, p[1] / pmag, p[2] / pmag};
    const Complex i1{0.0, 1.0};
    // (n.sigma) u
    rotated[0] = n[2] * spinor[0] + (n[0] - i1 * n[1]) * spinor[1];
    rotated[1] = (n[0] + i1 * n[1]) * spinor[0] - n[2] * spinor[1];
  }
  const std::array<Complex, 2> plus{out.Ns, 0.0};
  const std::array<Complex, 2> minus{0.0, lower};
  const Vec4 a = linalg::kron(plus, spinor);
  const Vec4 b = linalg::kron(minus, rotated);
  for (std::size_t i = 0; i < 4; ++i) out.state[i] = a[i] + b[i];
  return out;
}

}  // namespace dirac_trap::spectrum
