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

// Time evolution of ionic basis states through the Dirac eigenbasis:
//
//   <k|j(t)> = sum_{n,s} W^j_{n,s} M^k_{n,s} e^{-i lambda_{n,s} t}

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "dirac_trap/kernels.hpp"
#include "dirac_trap/spectrum.hpp"

namespace dirac_trap::dynamics {

using linalg::Complex;
using linalg::Vec4;
using spectrum::EigenSystem;

/// a = |00>, b = |01>, c = |10>, d = |11>.
enum class IonicLabel { a = 0, b = 1, c = 2, d = 3 };

inline constexpr std::array<IonicLabel, 4> kAllLabels{IonicLabel::a, IonicLabel::b, IonicLabel::c, IonicLabel::d};

constexpr std::size_t index_of(IonicLabel l) { return static_cast<std::size_t>(l); }
char to_char(IonicLabel l);
/// Throws invalid_params on anything other than a, b, c, d.
IonicLabel parse_label(std::string_view text);

Vec4 basis_vector(IonicLabel l);

struct IonicState {
  Vec4 amps{};
  double t = 0.0;
};

/// Uniform grid of `steps` points on [0, t_max]. Requires steps >= 2, t_max > 0.
std::vector<double> uniform_grid(double t_max, std::size_t steps);

/// Physical times for a grid given in |p|.t units. With p = 0 the grid is
/// already in natural time units.
std::vector<double> times_from_pt(std::span<const double> pt, double p);

struct TimeSeries {
  std::vector<double> t_grid;
  std::vector<double> values;
};

/// Amplitudes on a time grid, structure of arrays.
struct AmplitudeSeries {
  std::vector<double> t;
  kernels::AmplitudeBlock amps;

  Vec4 at(std::size_t i) const;
};

IonicState evolve_ionic(const EigenSystem& sys, IonicLabel j, double t);

/// |<k|j(t)>|^2 from the amplitude, clamped to [0, 1].
double transition_probability(const EigenSystem& sys, IonicLabel j, IonicLabel k, double t);

/// sum_{ns,ml} W^j_{ns} W^k_{ml} (W^j_{ml})^* (W^k_{ns})^* e^{-i (lambda_ns - lambda_ml) t}
/// Kept as an independent path; `imag_residue` should vanish.
struct QuadrupleSum {
  double value = 0.0;
  double imag_residue = 0.0;
};
QuadrupleSum transition_probability_quadruple_sum(const EigenSystem& sys, IonicLabel j, IonicLabel k, double t);

kernels::SpectralCoefficients spectral_coefficients(const EigenSystem& sys, IonicLabel j);

/// Amplitudes for every time in `t`, using the selected kernel variant.
AmplitudeSeries propagate(const EigenSystem& sys, IonicLabel j, std::span<const double> t,
                          kernels::Isa isa = kernels::detected_isa());

/// P_{j->a..d} on the grid.
struct TransitionSeries {
  std::vector<double> t_grid;
  std::array<std::vector<double>, 4> P;
};
TransitionSeries transition_series(const EigenSystem& sys, IonicLabel j, std::span<const double> t,
                                   kernels::Isa isa = kernels::detected_isa());

TimeSeries survivor_series(const EigenSystem& sys, IonicLabel j, std::span<const double> t,
                           kernels::Isa isa = kernels::detected_isa());

}  // namespace dirac_trap::dynamics
