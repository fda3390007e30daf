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

#include "dirac_trap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirac_trap/error.hpp"

namespace dirac_trap::dynamics {

namespace {

double clamp_probability(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

char to_char(IonicLabel l) { return static_cast<char>('a' + index_of(l)); }

IonicLabel parse_label(std::string_view text) {
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'd') return static_cast<IonicLabel>(text[0] - 'a');
  throw Error(ErrorCode::invalid_params, "ionic label must be one of a, b, c, d (got '" + std::string(text) + "')");
}

Vec4 basis_vector(IonicLabel l) {
  Vec4 v{};
  v[index_of(l)] = 1.0;
  return v;
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
  if (steps < 2) throw Error(ErrorCode::invalid_params, "grid needs at least 2 steps");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw Error(ErrorCode::invalid_params, "grid extent must be finite and > 0");
  std::vector<double> grid(steps);
  const double h = t_max / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) grid[i] = h * static_cast<double>(i);
  grid.back() = t_max;
  return grid;
}

std::vector<double> times_from_pt(std::span<const double> pt, double p) {
  const double scale = (p != 0.0) ? 1.0 / std::abs(p) : 1.0;
  std::vector<double> t(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) t[i] = pt[i] * scale;
  return t;
}

Vec4 AmplitudeSeries::at(std::size_t i) const {
  Vec4 v;
  for (std::size_t k = 0; k < 4; ++k) v[k] = {amps.re[k][i], amps.im[k][i]};
  return v;
}

IonicState evolve_ionic(const EigenSystem& sys, IonicLabel j, double t) {
  IonicState out;
  out.t = t;
  const std::size_t jj = index_of(j);
  std::array<Complex, 4> weights;
  for (std::size_t c = 0; c < 4; ++c) weights[c] = sys.W(c, jj) * std::polar(1.0, -sys.lambdas[c] * t);
  for (std::size_t k = 0; k < 4; ++k) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < 4; ++c) acc += sys.M(k, c) * weights[c];
    out.amps[k] = acc;
  }
  return out;
}

double transition_probability(const EigenSystem& sys, IonicLabel j, IonicLabel k, double t) {
  return clamp_probability(std::norm(evolve_ionic(sys, j, t).amps[index_of(k)]));
}

QuadrupleSum transition_probability_quadruple_sum(const EigenSystem& sys, IonicLabel j, IonicLabel k, double t) {
  const std::size_t jj = index_of(j);
  const std::size_t kk = index_of(k);
  // e^{-i(lambda_a - lambda_b) t} as a product of per-mode phasors, the same
  // rounding the propagator sees; (lambda_a - lambda_b) t rounds differently
  // once |lambda t| is large.
  std::array<Complex, 4> phase;
  for (std::size_t a = 0; a < 4; ++a) phase[a] = std::polar(1.0, -sys.lambdas[a] * t);
  Complex acc = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const Complex term = sys.W(a, jj) * sys.W(b, kk) * std::conj(sys.W(b, jj)) * std::conj(sys.W(a, kk));
      acc += term * phase[a] * std::conj(phase[b]);
    }
  }
  return {std::real(acc), std::imag(acc)};
}

kernels::SpectralCoefficients spectral_coefficients(const EigenSystem& sys, IonicLabel j) {
  kernels::SpectralCoefficients c;
  const std::size_t jj = index_of(j);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t n = 0; n < 4; ++n) {
      const Complex v = sys.W(n, jj) * sys.M(k, n);
      c.re[4 * k + n] = std::real(v);
      c.im[4 * k + n] = std::imag(v);
    }
  }
  return c;
}

AmplitudeSeries propagate(const EigenSystem& sys, IonicLabel j, std::span<const double> t, kernels::Isa isa) {
  AmplitudeSeries out;
  out.t.assign(t.begin(), t.end());
  const kernels::PhaseTable phases = kernels::make_phase_table(sys.lambdas, t);
  kernels::synthesize_amplitudes(isa, spectral_coefficients(sys, j), phases, out.amps);
  return out;
}

TransitionSeries transition_series(const EigenSystem& sys, IonicLabel j, std::span<const double> t,
                                   kernels::Isa isa) {
  const AmplitudeSeries series = propagate(sys, j, t, isa);
  TransitionSeries out;
  out.t_grid = series.t;
  kernels::probabilities(isa, series.amps, out.P);
  for (auto& column : out.P)
    for (double& x : column) x = clamp_probability(x);
  return out;
}

TimeSeries survivor_series(const EigenSystem& sys, IonicLabel j, std::span<const double> t, kernels::Isa isa) {
  TransitionSeries all = transition_series(sys, j, t, isa);
  return {std::move(all.t_grid), std::move(all.P[index_of(j)])};
}

}  // namespace dirac_trap::dynamics
