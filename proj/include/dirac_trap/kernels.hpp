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

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant selected at runtime.
// Both variants consume identical structure-of-arrays inputs so they can be
// compared element by element.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace dirac_trap::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// True when the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa);

/// Best available variant on this machine.
Isa detected_isa();

/// cos(lambda_n t_i) and sin(lambda_n t_i), evaluated once with libm so
/// every variant sees bit-identical phases.
struct PhaseTable {
  std::array<std::vector<double>, 4> cos;
  std::array<std::vector<double>, 4> sin;
  std::size_t size() const { return cos[0].size(); }
};

PhaseTable make_phase_table(const std::array<double, 4>& lambdas, std::span<const double> times);

/// c[k][n] = W^j_n M^k_n stored as re/im at index 4k + n.
struct SpectralCoefficients {
  std::array<double, 16> re{};
  std::array<double, 16> im{};
};

/// Amplitudes <k|j(t_i)> for k = a..d, structure of arrays.
struct AmplitudeBlock {
  std::array<std::vector<double>, 4> re;
  std::array<std::vector<double>, 4> im;
  std::size_t size() const { return re[0].size(); }
  void resize(std::size_t n);
};

/// amp_k(t) = sum_n c[k][n] e^{-i lambda_n t}
void synthesize_amplitudes(Isa isa, const SpectralCoefficients& coeffs, const PhaseTable& phases,
                           AmplitudeBlock& out);

/// |amp_k|^2 per component.
void probabilities(Isa isa, const AmplitudeBlock& amps, std::array<std::vector<double>, 4>& out);

/// Per-time two-qubit observables read directly off the amplitudes:
///   concurrence 2|a d - b c|, pair chirality 2 Re(a* d + b* c),
///   P_ad = |a + d|^2 / 2, P_cb = |c + b|^2 / 2.
struct PairObservables {
  std::vector<double> concurrence;
  std::vector<double> pair_chirality;
  std::vector<double> P_ad;
  std::vector<double> P_cb;
  void resize(std::size_t n);
};

void pair_observables(Isa isa, const AmplitudeBlock& amps, PairObservables& out);

/// Planar configurations evaluated in bulk. theta enters only through its
/// sine and cosine, which the caller provides.
struct PlanarBatch {
  std::vector<double> m, p, eps, sin_theta, cos_theta, kappa, mu;
  std::size_t size() const { return m.size(); }
  void push_back(double m_, double p_, double eps_, double theta, double kappa_, double mu_);
};

struct PlanarObservables {
  std::vector<double> lambda;
  std::vector<double> concurrence;
  std::vector<double> chirality;  // Dirac gamma5
  void resize(std::size_t n);
};

/// Closed-form lambda_{n,s}, eigenstate concurrence and Dirac chirality.
/// Entries with m^2 kappa^2 + (mu^2+kappa^2) p^2 sin^2 = 0 come out NaN.
void planar_observables(Isa isa, const PlanarBatch& in, int n, int s, PlanarObservables& out);

namespace scalar {
void synthesize_amplitudes(const SpectralCoefficients& coeffs, const PhaseTable& phases, AmplitudeBlock& out);
void probabilities(const AmplitudeBlock& amps, std::array<std::vector<double>, 4>& out);
void pair_observables(const AmplitudeBlock& amps, PairObservables& out);
void planar_observables(const PlanarBatch& in, int n, int s, PlanarObservables& out);
}  // namespace scalar

#if defined(DIRAC_TRAP_HAVE_AVX2)
namespace avx2 {
void synthesize_amplitudes(const SpectralCoefficients& coeffs, const PhaseTable& phases, AmplitudeBlock& out);
void probabilities(const AmplitudeBlock& amps, std::array<std::vector<double>, 4>& out);
void pair_observables(const AmplitudeBlock& amps, PairObservables& out);
void planar_observables(const PlanarBatch& in, int n, int s, PlanarObservables& out);
}  // namespace avx2
#endif

}  // namespace dirac_trap::kernels
