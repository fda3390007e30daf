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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dirac_trap/dirac.hpp"
#include "dirac_trap/dynamics.hpp"
#include "dirac_trap/kernels.hpp"
#include "dirac_trap/spectrum.hpp"
#include "format.hpp"

namespace dirac_trap::cli {

enum class Command { eigen, evolve, sweep, figure };

/// axis=lo:hi:n, sampled linearly or (with log) geometrically.
struct SweepSpec {
  std::string axis;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
  bool log = false;

  std::vector<double> values() const;
};

/// Accepts m, p, eps, theta, kappa, mu.
SweepSpec parse_sweep(const std::string& text, bool log);
spectrum::ModeIndex parse_mode(const std::string& text);

struct RunConfig {
  Command command = Command::eigen;
  dirac::PlanarConfig planar{1.0, 1.0, 1.0, 0.0, 0.0, 0.0};
  std::optional<spectrum::ModeIndex> mode;
  dynamics::IonicLabel init = dynamics::IonicLabel::a;
  double tmax = 20.0;  // in p.t units
  std::size_t steps = 2001;
  std::optional<SweepSpec> sweep;
  int figure = 0;
  Format format = Format::csv;
  std::string out;  // file (eigen/evolve/sweep) or directory (figure); empty = stdout / "."
  bool oracle = false;
  kernels::Isa isa = kernels::detected_isa();
};

/// Per-mode lambda, |M^a..d|, relative phases, concurrence and Dirac chirality.
Table run_eigen(const RunConfig& cfg);

/// Per-time P_{j->a..d}, concurrence, entropy, pair chirality, P_ad, P_cb and
/// Dirac chirality of |j(t)>.
Table run_evolve(const RunConfig& cfg);

/// Eigen-mode lambda, concurrence and Dirac chirality along one parameter axis.
Table run_sweep(const RunConfig& cfg);

struct NamedTable {
  std::string stem;
  Table table;
};

/// One table per figure panel. Panels use p = 1,
/// eps = 1, theta = pi/4 unless the panel sweeps theta.
std::vector<NamedTable> run_figure(int figure, const RunConfig& cfg);

/// Full command-line entry point. Returns the process exit status:
/// 0 success, 2 parameter error, 3 degenerate regime, 1 anything else.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dirac_trap::cli
