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

#include "dirac_trap/error.hpp"
#include "dirac_trap/kernels.hpp"

namespace dirac_trap::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(DIRAC_TRAP_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

Isa detected_isa() { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

namespace {

void require(Isa isa) {
  if (!isa_available(isa))
    throw Error(ErrorCode::invalid_params, std::string("kernel variant not available: ") + std::string(to_string(isa)));
}

}  // namespace

void AmplitudeBlock::resize(std::size_t n) {
  for (std::size_t k = 0; k < 4; ++k) {
    re[k].resize(n);
    im[k].resize(n);
  }
}

void PairObservables::resize(std::size_t n) {
  concurrence.resize(n);
  pair_chirality.resize(n);
  P_ad.resize(n);
  P_cb.resize(n);
}

void PlanarObservables::resize(std::size_t n) {
  lambda.resize(n);
  concurrence.resize(n);
  chirality.resize(n);
}

void PlanarBatch::push_back(double m_, double p_, double eps_, double theta, double kappa_, double mu_) {
  m.push_back(m_);
  p.push_back(p_);
  eps.push_back(eps_);
  sin_theta.push_back(std::sin(theta));
  cos_theta.push_back(std::cos(theta));
  kappa.push_back(kappa_);
  mu.push_back(mu_);
}

PhaseTable make_phase_table(const std::array<double, 4>& lambdas, std::span<const double> times) {
  PhaseTable table;
  for (std::size_t n = 0; n < 4; ++n) {
    table.cos[n].resize(times.size());
    table.sin[n].resize(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double phase = lambdas[n] * times[i];
      table.cos[n][i] = std::cos(phase);
      table.sin[n][i] = std::sin(phase);
    }
  }
  return table;
}

void synthesize_amplitudes(Isa isa, const SpectralCoefficients& coeffs, const PhaseTable& phases,
                           AmplitudeBlock& out) {
  require(isa);
#if defined(DIRAC_TRAP_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::synthesize_amplitudes(coeffs, phases, out);
#endif
  scalar::synthesize_amplitudes(coeffs, phases, out);
}

void probabilities(Isa isa, const AmplitudeBlock& amps, std::array<std::vector<double>, 4>& out) {
  require(isa);
#if defined(DIRAC_TRAP_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::probabilities(amps, out);
#endif
  scalar::probabilities(amps, out);
}

void pair_observables(Isa isa, const AmplitudeBlock& amps, PairObservables& out) {
  require(isa);
#if defined(DIRAC_TRAP_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::pair_observables(amps, out);
#endif
  scalar::pair_observables(amps, out);
}

void planar_observables(Isa isa, const PlanarBatch& in, int n, int s, PlanarObservables& out) {
  require(isa);
  if ((n != 0 && n != 1) || (s != 0 && s != 1))
    throw Error(ErrorCode::invalid_params, "mode indices must be 0 or 1");
#if defined(DIRAC_TRAP_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::planar_observables(in, n, s, out);
#endif
  scalar::planar_observables(in, n, s, out);
}

}  // namespace dirac_trap::kernels
