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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "dirac_trap/kernels.hpp"

namespace dirac_trap::kernels::avx2 {

namespace {

inline __m256d sq(__m256d x) { return _mm256_mul_pd(x, x); }

inline __m256d abs2(__m256d re, __m256d im) { return _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im)); }

}  // namespace

void synthesize_amplitudes(const SpectralCoefficients& coeffs, const PhaseTable& phases, AmplitudeBlock& out) {
  const std::size_t count = phases.size();
  out.resize(count);

  __m256d cr[16];
  __m256d ci[16];
  for (std::size_t q = 0; q < 16; ++q) {
    cr[q] = _mm256_set1_pd(coeffs.re[q]);
    ci[q] = _mm256_set1_pd(coeffs.im[q]);
  }

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d c[4];
    __m256d s[4];
    for (std::size_t n = 0; n < 4; ++n) {
      c[n] = _mm256_loadu_pd(phases.cos[n].data() + i);
      s[n] = _mm256_loadu_pd(phases.sin[n].data() + i);
    }
    for (std::size_t k = 0; k < 4; ++k) {
      __m256d re = _mm256_setzero_pd();
      __m256d im = _mm256_setzero_pd();
      for (std::size_t n = 0; n < 4; ++n) {
        const std::size_t q = 4 * k + n;
        re = _mm256_fmadd_pd(cr[q], c[n], re);
        re = _mm256_fmadd_pd(ci[q], s[n], re);
        im = _mm256_fmadd_pd(ci[q], c[n], im);
        im = _mm256_fnmadd_pd(cr[q], s[n], im);
      }
      _mm256_storeu_pd(out.re[k].data() + i, re);
      _mm256_storeu_pd(out.im[k].data() + i, im);
    }
  }
  for (; i < count; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t n = 0; n < 4; ++n) {
        const std::size_t q = 4 * k + n;
        re += coeffs.re[q] * phases.cos[n][i] + coeffs.im[q] * phases.sin[n][i];
        im += coeffs.im[q] * phases.cos[n][i] - coeffs.re[q] * phases.sin[n][i];
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
    const double* re = amps.re[k].data();
    const double* im = amps.im[k].data();
    double* dst = out[k].data();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) _mm256_storeu_pd(dst + i, abs2(_mm256_loadu_pd(re + i), _mm256_loadu_pd(im + i)));
    for (; i < count; ++i) dst[i] = re[i] * re[i] + im[i] * im[i];
  }
}

void pair_observables(const AmplitudeBlock& amps, PairObservables& out) {
  const std::size_t count = amps.size();
  out.resize(count);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d half = _mm256_set1_pd(0.5);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d ar = _mm256_loadu_pd(amps.re[0].data() + i), ai = _mm256_loadu_pd(amps.im[0].data() + i);
    const __m256d br = _mm256_loadu_pd(amps.re[1].data() + i), bi = _mm256_loadu_pd(amps.im[1].data() + i);
    const __m256d cr = _mm256_loadu_pd(amps.re[2].data() + i), ci = _mm256_loadu_pd(amps.im[2].data() + i);
    const __m256d dr = _mm256_loadu_pd(amps.re[3].data() + i), di = _mm256_loadu_pd(amps.im[3].data() + i);

    // a d - b c
    const __m256d det_re = _mm256_sub_pd(_mm256_fmsub_pd(ar, dr, _mm256_mul_pd(ai, di)),
                                         _mm256_fmsub_pd(br, cr, _mm256_mul_pd(bi, ci)));
    const __m256d det_im = _mm256_sub_pd(_mm256_fmadd_pd(ar, di, _mm256_mul_pd(ai, dr)),
                                         _mm256_fmadd_pd(br, ci, _mm256_mul_pd(bi, cr)));
    _mm256_storeu_pd(out.concurrence.data() + i, _mm256_mul_pd(two, _mm256_sqrt_pd(abs2(det_re, det_im))));

    const __m256d re_ad = _mm256_fmadd_pd(ar, dr, _mm256_mul_pd(ai, di));
    const __m256d re_bc = _mm256_fmadd_pd(br, cr, _mm256_mul_pd(bi, ci));
    _mm256_storeu_pd(out.pair_chirality.data() + i, _mm256_mul_pd(two, _mm256_add_pd(re_ad, re_bc)));

    const __m256d sad = abs2(_mm256_add_pd(ar, dr), _mm256_add_pd(ai, di));
    const __m256d scb = abs2(_mm256_add_pd(cr, br), _mm256_add_pd(ci, bi));
    _mm256_storeu_pd(out.P_ad.data() + i, _mm256_mul_pd(half, sad));
    _mm256_storeu_pd(out.P_cb.data() + i, _mm256_mul_pd(half, scb));
  }
  if (i < count) {
    // scalar tail on a shifted view
    AmplitudeBlock tail;
    tail.resize(count - i);
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = i; j < count; ++j) {
        tail.re[k][j - i] = amps.re[k][j];
        tail.im[k][j - i] = amps.im[k][j];
      }
    PairObservables rest;
    scalar::pair_observables(tail, rest);
    for (std::size_t j = i; j < count; ++j) {
      out.concurrence[j] = rest.concurrence[j - i];
      out.pair_chirality[j] = rest.pair_chirality[j - i];
      out.P_ad[j] = rest.P_ad[j - i];
      out.P_cb[j] = rest.P_cb[j - i];
    }
  }
}

void planar_observables(const PlanarBatch& in, int n, int s, PlanarObservables& out) {
  const std::size_t count = in.size();
  out.resize(count);
  const double sign_n_d = (n == 0) ? 1.0 : -1.0;
  const double sign_s_d = (s == 0) ? 1.0 : -1.0;
  const __m256d sign_n = _mm256_set1_pd(sign_n_d);
  const __m256d sign_ns = _mm256_set1_pd(sign_n_d * sign_s_d);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d zero = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d m = _mm256_loadu_pd(in.m.data() + i);
    const __m256d p = _mm256_loadu_pd(in.p.data() + i);
    const __m256d eps = _mm256_loadu_pd(in.eps.data() + i);
    const __m256d st = _mm256_loadu_pd(in.sin_theta.data() + i);
    const __m256d ct = _mm256_loadu_pd(in.cos_theta.data() + i);
    const __m256d kappa = _mm256_loadu_pd(in.kappa.data() + i);
    const __m256d mu = _mm256_loadu_pd(in.mu.data() + i);

    const __m256d m2 = sq(m), p2 = sq(p), e2 = sq(eps), k2 = sq(kappa), mu2 = sq(mu);
    const __m256d km2 = _mm256_add_pd(k2, mu2);
    const __m256d p2st2 = _mm256_mul_pd(p2, sq(st));

    const __m256d g1 = _mm256_fmadd_pd(km2, e2, _mm256_add_pd(p2, m2));
    const __m256d q = _mm256_fmadd_pd(km2, p2st2, _mm256_mul_pd(m2, k2));
    const __m256d upper = _mm256_fmadd_pd(two, _mm256_sqrt_pd(_mm256_mul_pd(e2, q)), g1);
    __m256d lambda2 = upper;
    if (s != 0) {
      const __m256d first = _mm256_fnmadd_pd(km2, e2, _mm256_add_pd(p2, m2));
      __m256d disc = _mm256_mul_pd(first, first);
      disc = _mm256_fmadd_pd(four, _mm256_mul_pd(_mm256_mul_pd(m2, mu2), e2), disc);
      disc = _mm256_fmadd_pd(four, _mm256_mul_pd(_mm256_mul_pd(km2, e2), _mm256_mul_pd(p2, sq(ct))), disc);
      lambda2 = _mm256_div_pd(disc, upper);
    }
    const __m256d abs_lambda = _mm256_sqrt_pd(lambda2);
    _mm256_storeu_pd(out.lambda.data() + i, _mm256_mul_pd(sign_n, abs_lambda));

    const __m256d ratio = _mm256_div_pd(_mm256_sub_pd(lambda2, m2), lambda2);
    const __m256d bracket = _mm256_fmadd_pd(mu2, ratio, k2);
    const __m256d one_minus_a2 = _mm256_div_pd(_mm256_mul_pd(p2st2, bracket), q);
    // maxpd returns the second operand when either is NaN, so 0/0 stays NaN
    _mm256_storeu_pd(out.concurrence.data() + i, _mm256_sqrt_pd(_mm256_max_pd(zero, one_minus_a2)));

    const __m256d num = _mm256_mul_pd(_mm256_mul_pd(sign_ns, _mm256_mul_pd(m, p)), _mm256_mul_pd(kappa, ct));
    const __m256d den = _mm256_mul_pd(abs_lambda, _mm256_sqrt_pd(q));
    _mm256_storeu_pd(out.chirality.data() + i, _mm256_div_pd(num, den));
  }
  for (; i < count; ++i) {
    PlanarBatch one;
    one.m = {in.m[i]};
    one.p = {in.p[i]};
    one.eps = {in.eps[i]};
    one.sin_theta = {in.sin_theta[i]};
    one.cos_theta = {in.cos_theta[i]};
    one.kappa = {in.kappa[i]};
    one.mu = {in.mu[i]};
    PlanarObservables r;
    scalar::planar_observables(one, n, s, r);
    out.lambda[i] = r.lambda[0];
    out.concurrence[i] = r.concurrence[0];
    out.chirality[i] = r.chirality[0];
  }
}

}  // namespace dirac_trap::kernels::avx2
