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

#include <cmath>

#include "dirac_trap/kernels.hpp"

namespace dirac_trap::kernels::scalar {

void synthesize_amplitudes(const SpectralCoefficients& coeffs, const PhaseTable& phases, AmplitudeBlock& out) {
  const std::size_t count = phases.size();
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t n = 0; n < 4; ++n) {
        const double cr = coeffs.re[4 * k + n];
        const double ci = coeffs.im[4 * k + n];
        const double c = phases.cos[n][i];
        const double s = phases.sin[n][i];
        // (cr + i ci)(c - i s)
        re += cr * c + ci * s;
        im += ci * c - cr * s;
      }
      out.re[k][i] = re;
      out.im[k][i] = im;
    }
  }
}

void probabilities(const AmplitudeBlock& amps, std::array<std::vector<double>, 4>& out) {
  const std::size_t count = amps.size();
  for (std::size_t k = 0; k < 4; ++k) {
    out[k].resize(count);
    for (std::size_t i = 0; i < count; ++i) out[k][i] = amps.re[k][i] * amps.re[k][i] + amps.im[k][i] * amps.im[k][i];
  }
}

void pair_observables(const AmplitudeBlock& amps, PairObservables& out) {
  const std::size_t count = amps.size();
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double ar = amps.re[0][i], ai = amps.im[0][i];
    const double br = amps.re[1][i], bi = amps.im[1][i];
    const double cr = amps.re[2][i], ci = amps.im[2][i];
    const double dr = amps.re[3][i], di = amps.im[3][i];

    const double det_re = (ar * dr - ai * di) - (br * cr - bi * ci);
    const double det_im = (ar * di + ai * dr) - (br * ci + bi * cr);
    out.concurrence[i] = 2.0 * std::sqrt(det_re * det_re + det_im * det_im);
    out.pair_chirality[i] = 2.0 * ((ar * dr + ai * di) + (br * cr + bi * ci));

    const double sad_r = ar + dr, sad_i = ai + di;
    const double scb_r = cr + br, scb_i = ci + bi;
    out.P_ad[i] = 0.5 * (sad_r * sad_r + sad_i * sad_i);
    out.P_cb[i] = 0.5 * (scb_r * scb_r + scb_i * scb_i);
  }
}

void planar_observables(const PlanarBatch& in, int n, int s, PlanarObservables& out) {
  const std::size_t count = in.size();
  out.resize(count);
  const double sign_n = (n == 0) ? 1.0 : -1.0;
  const double sign_s = (s == 0) ? 1.0 : -1.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double m2 = in.m[i] * in.m[i];
    const double p2 = in.p[i] * in.p[i];
    const double e2 = in.eps[i] * in.eps[i];
    const double k2 = in.kappa[i] * in.kappa[i];
    const double mu2 = in.mu[i] * in.mu[i];
    const double st2 = in.sin_theta[i] * in.sin_theta[i];
    const double ct2 = in.cos_theta[i] * in.cos_theta[i];
    const double km2 = k2 + mu2;

    const double g1 = p2 + m2 + km2 * e2;
    const double q = m2 * k2 + km2 * p2 * st2;  // g2 / eps^2
    const double upper = g1 + 2.0 * std::sqrt(e2 * q);
    double lambda2 = upper;
    if (s != 0) {
      const double first = p2 + m2 - km2 * e2;
      const double disc = first * first + 4.0 * m2 * mu2 * e2 + 4.0 * km2 * e2 * p2 * ct2;
      lambda2 = disc / upper;
    }
    const double abs_lambda = std::sqrt(lambda2);
    out.lambda[i] = sign_n * abs_lambda;

    // 1 - |a2|^2 = p^2 sin^2 (kappa^2 + mu^2 (lambda^2 - m^2)/lambda^2) / q
    const double one_minus_a2 = p2 * st2 * (k2 + mu2 * (lambda2 - m2) / lambda2) / q;
    out.concurrence[i] = std::sqrt(one_minus_a2 < 0.0 ? 0.0 : one_minus_a2);

    out.chirality[i] =
        sign_n * sign_s * in.m[i] * in.p[i] * in.kappa[i] * in.cos_theta[i] / (abs_lambda * std::sqrt(q));
  }
}

}  // namespace dirac_trap::kernels::scalar
