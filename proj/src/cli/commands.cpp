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

#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "dirac_trap/entanglement.hpp"
#include "dirac_trap/error.hpp"

namespace dirac_trap::cli {

using dynamics::IonicLabel;
using spectrum::ModeIndex;

namespace {

constexpr std::array<std::pair<double, double>, 3> kFigureCouplings{{{0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}};
constexpr std::array<double, 2> kFigureMasses{0.0, 1.0};

std::string tag(double x) {
  std::string s = format_number(x);
  for (char& ch : s)
    if (ch == '.') ch = 'p';
  return s;
}

std::string coupling_tag(double kappa, double mu) { return "k" + tag(kappa) + "_mu" + tag(mu); }

spectrum::Fallback fallback(const RunConfig& cfg) {
  return cfg.oracle ? spectrum::Fallback::oracle : spectrum::Fallback::none;
}

std::vector<ModeIndex> selected_modes(const RunConfig& cfg) {
  if (cfg.mode) return {*cfg.mode};
  return {spectrum::kAllModes.begin(), spectrum::kAllModes.end()};
}

void validate_planar(const dirac::PlanarConfig& pc) {
  for (double x : {pc.m, pc.p, pc.eps, pc.theta, pc.kappa, pc.mu})
    if (!std::isfinite(x)) throw Error(ErrorCode::invalid_params, "planar parameters must be finite");
}

void set_axis(dirac::PlanarConfig& pc, const std::string& axis, double value) {
  if (axis == "m")
    pc.m = value;
  else if (axis == "p")
    pc.p = value;
  else if (axis == "eps")
    pc.eps = value;
  else if (axis == "theta")
    pc.theta = value;
  else if (axis == "kappa")
    pc.kappa = value;
  else if (axis == "mu")
    pc.mu = value;
  else
    throw Error(ErrorCode::invalid_params, "unknown sweep axis '" + axis + "'");
}

std::vector<double> pt_grid(const RunConfig& cfg) { return dynamics::uniform_grid(cfg.tmax, cfg.steps); }

Cell phase_cell(const std::optional<linalg::Complex>& z) {
  if (!z) return std::monostate{};
  return *z;
}

// Closed-form eigen observables for a batch of planar points, one mode.
kernels::PlanarObservables planar_batch(const RunConfig& cfg, const std::vector<dirac::PlanarConfig>& points,
                                        ModeIndex mode) {
  kernels::PlanarBatch batch;
  for (const auto& pc : points) batch.push_back(pc.m, pc.p, pc.eps, pc.theta, pc.kappa, pc.mu);
  kernels::PlanarObservables obs;
  kernels::planar_observables(cfg.isa, batch, mode.n, mode.s, obs);

  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool degenerate = !(dirac::invariants(points[i].to_params()).g2 > spectrum::kG2Floor);
    if (!degenerate && std::isfinite(obs.concurrence[i]) && std::isfinite(obs.chirality[i])) continue;
    if (!cfg.oracle)
      throw Error(ErrorCode::degenerate_invariant,
                  "degenerate g2 at sweep point " + std::to_string(i) + "; rerun with --oracle");
    const spectrum::EigenSystem sys = spectrum::eigensystem(points[i].to_params(), spectrum::Fallback::oracle);
    const linalg::Mat4& rho = sys.rhos[mode.column()];
    obs.lambda[i] = sys.lambda(mode);
    obs.concurrence[i] = entanglement::concurrence(rho);
    obs.chirality[i] = entanglement::chirality(rho, dirac::Gamma5Form::dirac);
  }
  return obs;
}

Table figure1_panel(const RunConfig& cfg, int s, bool theta_axis) {
  const int n = cfg.mode ? cfg.mode->n : 0;
  std::vector<double> xs;
  if (theta_axis) {
    for (int i = 0; i < 201; ++i) xs.push_back((i + 0.5) * std::numbers::pi / 201.0);
  } else {
    for (int i = 0; i < 200; ++i) xs.push_back(std::pow(10.0, -3.0 + 6.0 * i / 199.0));
  }

  Table t;
  t.columns.push_back({theta_axis ? "theta" : "m_over_p"});
  std::vector<kernels::PlanarObservables> curves;
  for (const auto& [kappa, mu] : kFigureCouplings) {
    std::vector<dirac::PlanarConfig> points;
    for (double x : xs) {
      dirac::PlanarConfig pc{1.0, 1.0, cfg.planar.eps, std::numbers::pi / 4.0, kappa, mu};
      if (theta_axis)
        pc.theta = x;
      else
        pc.m = x;
      points.push_back(pc);
    }
    curves.push_back(planar_batch(cfg, points, {n, s}));
    t.columns.push_back({"C_" + coupling_tag(kappa, mu)});
    t.columns.push_back({"abs_gamma5_" + coupling_tag(kappa, mu)});
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Cell> row{xs[i]};
    for (const auto& c : curves) {
      row.emplace_back(c.concurrence[i]);
      row.emplace_back(std::abs(c.chirality[i]));
    }
    t.add_row(std::move(row));
  }
  return t;
}

struct Curve {
  std::string name;
  spectrum::EigenSystem sys;
};

std::vector<Curve> figure_curves(const RunConfig& cfg) {
  std::vector<Curve> curves;
  for (double m : kFigureMasses)
    for (const auto& [kappa, mu] : kFigureCouplings) {
      const dirac::PlanarConfig pc{m, 1.0, cfg.planar.eps, std::numbers::pi / 4.0, kappa, mu};
      curves.push_back({"m" + tag(m) + "_" + coupling_tag(kappa, mu), spectrum::eigensystem(pc.to_params(), fallback(cfg))});
    }
  return curves;
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  if (n == 0) throw Error(ErrorCode::invalid_params, "sweep needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorCode::invalid_params, "sweep range must be finite");
  if (log && !(lo > 0.0 && hi > 0.0)) throw Error(ErrorCode::invalid_params, "log sweep needs lo, hi > 0");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = (n == 1) ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    v[i] = log ? std::pow(10.0, std::log10(lo) + f * (std::log10(hi) - std::log10(lo))) : lo + f * (hi - lo);
  }
  v.front() = lo;
  if (n > 1) v.back() = hi;
  return v;
}

SweepSpec parse_sweep(const std::string& text, bool log) {
  const auto eq = text.find('=');
  const auto c1 = text.find(':', eq == std::string::npos ? 0 : eq);
  const auto c2 = (c1 == std::string::npos) ? std::string::npos : text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
    throw Error(ErrorCode::invalid_params, "sweep must look like axis=lo:hi:n");
  SweepSpec s;
  s.axis = text.substr(0, eq);
  s.log = log;
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(eq + 1, c1 - eq - 1);
    const std::string hi = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string n = text.substr(c2 + 1);
    s.lo = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    s.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    const long count = std::stol(n, &used);
    if (used != n.size() || count < 1) throw std::invalid_argument(n);
    s.n = static_cast<std::size_t>(count);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::invalid_params, "cannot parse sweep '" + text + "'");
  }
  dirac::PlanarConfig probe;
  set_axis(probe, s.axis, 0.0);
  s.values();
  return s;
}

ModeIndex parse_mode(const std::string& text) {
  if (text.size() == 3 && text[1] == ',' && (text[0] == '0' || text[0] == '1') && (text[2] == '0' || text[2] == '1'))
    return {text[0] - '0', text[2] - '0'};
  throw Error(ErrorCode::invalid_params, "mode must be n,s with n, s in {0, 1}");
}

Table run_eigen(const RunConfig& cfg) {
  validate_planar(cfg.planar);
  const spectrum::EigenSystem sys = spectrum::eigensystem(cfg.planar.to_params(), fallback(cfg));

  Table t;
  t.columns = {{"n", ColumnKind::integer},   {"s", ColumnKind::integer},   {"lambda"},
               {"M_a"},                      {"M_b"},                      {"M_c"},
               {"M_d"},                      {"phase_ab", ColumnKind::complex}, {"phase_ac", ColumnKind::complex},
               {"phase_ad", ColumnKind::complex}, {"concurrence"},        {"chirality"},
               {"degenerate", ColumnKind::integer}};
  for (ModeIndex mode : selected_modes(cfg)) {
    const linalg::Mat4& rho = sys.rhos[mode.column()];
    const spectrum::Coefficients coef = spectrum::coefficients_from_density(rho);
    t.add_row({std::int64_t{mode.n}, std::int64_t{mode.s}, sys.lambda(mode), coef.moduli[0], coef.moduli[1],
               coef.moduli[2], coef.moduli[3], phase_cell(coef.phases[0]), phase_cell(coef.phases[1]),
               phase_cell(coef.phases[2]), entanglement::concurrence(rho),
               entanglement::chirality(rho, dirac::Gamma5Form::dirac), std::int64_t{sys.degenerate ? 1 : 0}});
  }
  return t;
}

Table run_evolve(const RunConfig& cfg) {
  validate_planar(cfg.planar);
  const spectrum::EigenSystem sys = spectrum::eigensystem(cfg.planar.to_params(), fallback(cfg));
  const std::vector<double> pt = pt_grid(cfg);
  const std::vector<double> times = dynamics::times_from_pt(pt, cfg.planar.p);

  const dynamics::TransitionSeries probs = dynamics::transition_series(sys, cfg.init, times, cfg.isa);
  const entanglement::CorrelationSeries corr = entanglement::correlation_series(sys, cfg.init, times, cfg.isa);

  Table t;
  t.columns = {{"pt"},      {"t"},           {"P_a"},  {"P_b"},  {"P_c"},  {"P_d"},
               {"concurrence"}, {"entropy"}, {"chirality"}, {"P_ad"}, {"P_cb"}, {"chirality_dirac"}};
  for (std::size_t i = 0; i < pt.size(); ++i) {
    const entanglement::CorrelationReport& r = corr.reports[i];
    t.add_row({pt[i], times[i], probs.P[0][i], probs.P[1][i], probs.P[2][i], probs.P[3][i], r.concurrence, r.entropy,
               r.chirality, r.P_ad, r.P_cb, r.chirality_dirac});
  }
  return t;
}

Table run_sweep(const RunConfig& cfg) {
  validate_planar(cfg.planar);
  if (!cfg.sweep) throw Error(ErrorCode::invalid_params, "sweep needs --sweep axis=lo:hi:n");
  const std::vector<double> xs = cfg.sweep->values();
  std::vector<dirac::PlanarConfig> points;
  for (double x : xs) {
    dirac::PlanarConfig pc = cfg.planar;
    set_axis(pc, cfg.sweep->axis, x);
    validate_planar(pc);
    points.push_back(pc);
  }

  Table t;
  t.columns = {{cfg.sweep->axis}, {"n", ColumnKind::integer}, {"s", ColumnKind::integer},
               {"lambda"},        {"concurrence"},            {"chirality"}};
  const std::vector<ModeIndex> modes = selected_modes(cfg);
  std::vector<kernels::PlanarObservables> per_mode;
  for (ModeIndex mode : modes) per_mode.push_back(planar_batch(cfg, points, mode));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < modes.size(); ++k)
      t.add_row({xs[i], std::int64_t{modes[k].n}, std::int64_t{modes[k].s}, per_mode[k].lambda[i],
                 per_mode[k].concurrence[i], per_mode[k].chirality[i]});
  return t;
}

std::vector<NamedTable> run_figure(int figure, const RunConfig& cfg) {
  std::vector<NamedTable> out;
  if (figure == 1) {
    for (int s : {0, 1}) {
      out.push_back({"fig1_s" + std::to_string(s) + "_mass", figure1_panel(cfg, s, false)});
      out.push_back({"fig1_s" + std::to_string(s) + "_theta", figure1_panel(cfg, s, true)});
    }
    return out;
  }
  if (figure < 1 || figure > 4) throw Error(ErrorCode::invalid_params, "figure id must be 1, 2, 3 or 4");

  const std::vector<double> pt = pt_grid(cfg);
  const std::vector<double> times = dynamics::times_from_pt(pt, 1.0);

  if (figure == 3) {
    for (double m : kFigureMasses) {
      const dirac::PlanarConfig pc{m, 1.0, cfg.planar.eps, std::numbers::pi / 4.0, 1.0, 1.0};
      const spectrum::EigenSystem sys = spectrum::eigensystem(pc.to_params(), fallback(cfg));
      const dynamics::TimeSeries aa = dynamics::survivor_series(sys, IonicLabel::a, times, cfg.isa);
      const dynamics::TimeSeries dd = dynamics::survivor_series(sys, IonicLabel::d, times, cfg.isa);
      Table t;
      t.columns = {{"pt"}, {"P_aa"}, {"P_dd"}};
      for (std::size_t i = 0; i < pt.size(); ++i) t.add_row({pt[i], aa.values[i], dd.values[i]});
      out.push_back({"fig3_m" + tag(m), std::move(t)});
    }
    return out;
  }

  const std::vector<Curve> curves = figure_curves(cfg);
  if (figure == 2) {
    std::vector<dynamics::TransitionSeries> series;
    for (const Curve& c : curves) series.push_back(dynamics::transition_series(c.sys, IonicLabel::a, times, cfg.isa));
    for (IonicLabel k : dynamics::kAllLabels) {
      Table t;
      t.columns.push_back({"pt"});
      for (const Curve& c : curves) t.columns.push_back({c.name});
      for (std::size_t i = 0; i < pt.size(); ++i) {
        std::vector<Cell> row{pt[i]};
        for (const auto& s : series) row.emplace_back(s.P[dynamics::index_of(k)][i]);
        t.add_row(std::move(row));
      }
      out.push_back({std::string("fig2_P_a") + dynamics::to_char(k), std::move(t)});
    }
    return out;
  }

  std::vector<entanglement::CorrelationSeries> series;
  for (const Curve& c : curves) series.push_back(entanglement::correlation_series(c.sys, IonicLabel::a, times, cfg.isa));
  for (const bool chirality : {false, true}) {
    Table t;
    t.columns.push_back({"pt"});
    for (const Curve& c : curves) t.columns.push_back({c.name});
    for (std::size_t i = 0; i < pt.size(); ++i) {
      std::vector<Cell> row{pt[i]};
      for (const auto& s : series) row.emplace_back(chirality ? s.reports[i].chirality : s.reports[i].concurrence);
      t.add_row(std::move(row));
    }
    out.push_back({chirality ? "fig4_chirality" : "fig4_concurrence", std::move(t)});
  }
  return out;
}

namespace {

struct RawOptions {
  double m = 1.0, p = 1.0, eps = 1.0, theta = 0.0, kappa = 0.0, mu = 0.0;
  std::string mode, init = "a", sweep, format = "csv", out, kernel = "auto";
  double tmax = 20.0;
  long steps = 2001;
  bool log = false, oracle = false;
  int figure = 0;
};

void add_common(CLI::App* sub, RawOptions& o) {
  sub->add_option("--m", o.m, "mass")->capture_default_str();
  sub->add_option("--p", o.p, "momentum along x")->capture_default_str();
  sub->add_option("--eps", o.eps, "electric field magnitude")->capture_default_str();
  sub->add_option("--theta", o.theta, "field angle to p (rad)")->capture_default_str();
  sub->add_option("--kappa", o.kappa, "electric dipole coupling")->capture_default_str();
  sub->add_option("--mu", o.mu, "magnetic dipole coupling")->capture_default_str();
  sub->add_option("--format", o.format, "csv or json")->capture_default_str();
  sub->add_option("--out", o.out, "output path");
  sub->add_flag("--oracle", o.oracle, "fall back to direct diagonalisation when g2 is degenerate");
  sub->add_option("--kernel", o.kernel, "auto, scalar or avx2")->capture_default_str();
}

void add_grid(CLI::App* sub, RawOptions& o) {
  sub->add_option("--tmax", o.tmax, "grid extent in p.t units")->capture_default_str();
  sub->add_option("--steps", o.steps, "grid points")->capture_default_str();
}

kernels::Isa parse_isa(const std::string& text) {
  if (text == "auto") return kernels::detected_isa();
  kernels::Isa isa;
  if (text == "scalar")
    isa = kernels::Isa::scalar;
  else if (text == "avx2")
    isa = kernels::Isa::avx2;
  else
    throw Error(ErrorCode::invalid_params, "kernel must be auto, scalar or avx2");
  if (!kernels::isa_available(isa)) throw Error(ErrorCode::invalid_params, "kernel '" + text + "' is not available here");
  return isa;
}

RunConfig to_config(Command command, const RawOptions& o) {
  RunConfig cfg;
  cfg.command = command;
  cfg.planar = {o.m, o.p, o.eps, o.theta, o.kappa, o.mu};
  validate_planar(cfg.planar);
  if (!o.mode.empty()) cfg.mode = parse_mode(o.mode);
  cfg.init = dynamics::parse_label(o.init);
  if (!(o.tmax > 0.0) || !std::isfinite(o.tmax)) throw Error(ErrorCode::invalid_params, "--tmax must be > 0");
  if (o.steps < 2) throw Error(ErrorCode::invalid_params, "--steps must be >= 2");
  cfg.tmax = o.tmax;
  cfg.steps = static_cast<std::size_t>(o.steps);
  if (!o.sweep.empty()) cfg.sweep = parse_sweep(o.sweep, o.log);
  cfg.figure = o.figure;
  cfg.format = parse_format(o.format);
  cfg.out = o.out;
  cfg.oracle = o.oracle;
  cfg.isa = parse_isa(o.kernel);
  return cfg;
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    write_table(out, table, cfg.format);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::invalid_params, "cannot open '" + cfg.out + "' for writing");
  write_table(file, table, cfg.format);
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_params:
    case ErrorCode::invalid_pair:
    case ErrorCode::magnetic_field_unsupported:
    case ErrorCode::zero_coupling:
      return 2;
    case ErrorCode::degenerate_invariant:
    case ErrorCode::zero_eigenvalue:
    case ErrorCode::complex_eigenvalue:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trapped-ion simulation of the Dirac equation with an electric field"};
  app.require_subcommand(1);
  RawOptions o;

  CLI::App* eigen = app.add_subcommand("eigen", "eigenvalues, coefficients and correlations of the stationary states");
  add_common(eigen, o);
  eigen->add_option("--mode", o.mode, "restrict to one mode n,s");

  CLI::App* evolve = app.add_subcommand("evolve", "time evolution of an ionic basis state");
  add_common(evolve, o);
  add_grid(evolve, o);
  evolve->add_option("--init", o.init, "initial level a|b|c|d")->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "eigen observables along one parameter axis");
  add_common(sweep, o);
  sweep->add_option("--sweep", o.sweep, "axis=lo:hi:n with axis in m,p,eps,theta,kappa,mu")->required();
  sweep->add_flag("--log", o.log, "geometric spacing");
  sweep->add_option("--mode", o.mode, "restrict to one mode n,s");

  CLI::App* figure = app.add_subcommand("figure", "regenerate the data behind figures 1-4");
  add_common(figure, o);
  add_grid(figure, o);
  figure->add_option("id", o.figure, "figure number 1-4")->required();
  figure->add_option("--mode", o.mode, "figure 1: take n from this mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (eigen->parsed()) {
      const RunConfig cfg = to_config(Command::eigen, o);
      emit(run_eigen(cfg), cfg, out);
    } else if (evolve->parsed()) {
      const RunConfig cfg = to_config(Command::evolve, o);
      emit(run_evolve(cfg), cfg, out);
    } else if (sweep->parsed()) {
      const RunConfig cfg = to_config(Command::sweep, o);
      emit(run_sweep(cfg), cfg, out);
    } else {
      const RunConfig cfg = to_config(Command::figure, o);
      const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
      const std::vector<NamedTable> tables = run_figure(cfg.figure, cfg);
      std::filesystem::create_directories(dir);
      for (const NamedTable& nt : tables) {
        const std::filesystem::path path = dir / (nt.stem + extension(cfg.format));
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error(ErrorCode::invalid_params, "cannot open '" + path.string() + "' for writing");
        write_table(file, nt.table, cfg.format);
        out << path.string() << '\n';
      }
    }
  } catch (const Error& e) {
    err << "dirac-trap: " << e.what() << '\n';
    if (e.code() == ErrorCode::degenerate_invariant) err << "hint: pass --oracle to diagonalise H directly\n";
    return exit_status(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "dirac-trap: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace dirac_trap::cli
