#include "nonlocal/schemes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nonlocal/errors.hpp"
#include "nonlocal/mesh.hpp"

namespace nonlocal {

namespace {

constexpr double cfl_slack = 1e-12;
constexpr double box_slack = 1e-12;

}  // namespace

SchemeKind parse_scheme(std::string_view name) {
  if (name == "MH" || name == "mh") return SchemeKind::MH;
  if (name == "FO" || name == "fo") return SchemeKind::FO;
  if (name == "RK2" || name == "rk2") return SchemeKind::RK2;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected MH, FO or RK2)");
}

std::string_view to_string(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::MH: return "MH";
    case SchemeKind::FO: return "FO";
    case SchemeKind::RK2: return "RK2";
  }
  return "?";
}

void SchemeConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 8.0 / 27.0)) throw std::invalid_argument("alpha must lie in (0, 8/27)");
  slope.validate();
}

MidTimeFaces predictor(const FaceValues& faces, const ConvolutionFields& conv, const FluxModel& model, double lambda) {
  const std::ptrdiff_t lo = std::max({faces.minus.first(), faces.plus.first(), conv.a_minus.first(), conv.a_plus.first()});
  const std::ptrdiff_t hi = std::min({faces.minus.last(), faces.plus.last(), conv.a_minus.last(), conv.a_plus.last()});
  MidTimeFaces half{OffsetArray(lo, hi), OffsetArray(lo, hi)};
  const double h = 0.5 * lambda;
  for (std::ptrdiff_t j = lo; j <= hi; ++j) {
    const double d = model(faces.minus[j], conv.a_minus[j]) - model(faces.plus[j], conv.a_plus[j]);
    half.minus[j] = faces.minus[j] - h * d;
    half.plus[j] = faces.plus[j] - h * d;
  }
  return half;
}

Stepper::Stepper(SchemeConfig config, FluxModel model, DiscreteKernel kernel, BoundaryCondition bc,
                 std::size_t num_cells, bool force)
    : config_(config), model_(std::move(model)), kernel_(std::move(kernel)), bc_(bc), m_(num_cells), force_(force) {
  config_.validate();
  if (m_ == 0) throw std::invalid_argument("Stepper: no cells");
  if (!(kernel_.dx > 0.0)) throw std::invalid_argument("Stepper: kernel is not sampled");
  if (!model_.eval) throw std::invalid_argument("Stepper: flux model has no evaluator");
  const auto m = static_cast<std::ptrdiff_t>(m_);
  const auto window = kernel_window(kernel_);
  k0_ = window.first;
  k1_ = window.last;
  // Cells whose faces feed an interface in [-1, M-1], then one more cell for
  // slopes, then the convolution stencil.
  p_lo_ = std::min<std::ptrdiff_t>(-1 - k1_, -1);
  p_hi_ = std::max<std::ptrdiff_t>(m - k0_, m);
  const std::ptrdiff_t q_lo = p_lo_ - 1;
  const std::ptrdiff_t q_hi = p_hi_ + 1;
  const std::ptrdiff_t r_lo = std::min(q_lo - k1_, q_lo);
  const std::ptrdiff_t r_hi = std::max(q_hi - k0_, q_hi);
  halo_ = std::max<std::ptrdiff_t>({-r_lo, r_hi - (m - 1), 1});
  if (bc_ == BoundaryCondition::periodic && halo_ > m) {
    throw std::invalid_argument("kernel stencil needs " + std::to_string(halo_) + " ghost cells but the periodic domain has only " +
                                std::to_string(m) + " cells");
  }
}

void Stepper::check_step(const SolutionState& state, double dt) const {
  if (state.cells.size() != m_) {
    throw std::invalid_argument("state has " + std::to_string(state.cells.size()) + " cells, solver expects " +
                                std::to_string(m_));
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive and finite");
  const double limit = cfl_max_dt(dx(), config_.alpha, model_.lip_rho);
  if (dt > limit * (1.0 + cfl_slack) && !force_) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "CFL violated: dt/dx = " << dt / dx() << " exceeds " << limit / dx();
    throw CflViolation(msg.str());
  }
}

void Stepper::extend(const std::vector<double>& cells) { extend_with_ghosts_into(rho_ext_, cells, bc_, halo_); }

void Stepper::mh_fluxes(double lambda) {
  const auto m = static_cast<std::ptrdiff_t>(m_);
  slopes_into(sigma_, rho_ext_, config_.slope, dx(), p_lo_, p_hi_);
  face_values_into(faces_, rho_ext_, sigma_);
  cell_center_convolution_into(conv_.a_center, rho_ext_, kernel_, p_lo_ - 1, p_hi_ + 1);
  convolution_slopes_into(conv_.s, conv_.a_center, config_.slope.theta, p_lo_, p_hi_);
  interface_convolutions_into(conv_.a_minus, conv_.a_plus, conv_.a_center, conv_.s);
  half_ = predictor(faces_, conv_, model_, lambda);
  midtime_convolution_into(a_half_, half_.plus, half_.minus, kernel_, -1, m - 1);
  flux_.reset(-1, m - 1);
  for (std::ptrdiff_t j = -1; j < m; ++j) {
    flux_[j] = lax_friedrichs_flux(model_, half_.minus[j], half_.plus[j + 1], a_half_[j], config_.alpha, lambda);
  }
}

void Stepper::fo_fluxes(const OffsetArray& rho_ext, double lambda, OffsetArray& out) {
  const auto m = static_cast<std::ptrdiff_t>(m_);
  fo_interface_convolution_into(a_fo_, rho_ext, kernel_, -1, m - 1);
  out.reset(-1, m - 1);
  for (std::ptrdiff_t j = -1; j < m; ++j) {
    out[j] = lax_friedrichs_flux(model_, rho_ext[j], rho_ext[j + 1], a_fo_[j], config_.alpha, lambda);
  }
}

void Stepper::euler_stage(const std::vector<double>& cells, double lambda, std::vector<double>& out) {
  const auto m = static_cast<std::ptrdiff_t>(m_);
  extend(cells);
  slopes_into(sigma_, rho_ext_, config_.slope, dx(), p_lo_, p_hi_);
  face_values_into(faces_, rho_ext_, sigma_);
  midtime_convolution_into(a_half_, faces_.plus, faces_.minus, kernel_, -1, m - 1);
  flux_.reset(-1, m - 1);
  for (std::ptrdiff_t j = -1; j < m; ++j) {
    flux_[j] = lax_friedrichs_flux(model_, faces_.minus[j], faces_.plus[j + 1], a_half_[j], config_.alpha, lambda);
  }
  out.resize(m_);
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    out[static_cast<std::size_t>(j)] = cells[static_cast<std::size_t>(j)] - lambda * (flux_[j] - flux_[j - 1]);
  }
}

void Stepper::finish(std::vector<double>& cells) const {
  for (std::size_t j = 0; j < cells.size(); ++j) {
    if (!std::isfinite(cells[j])) {
      throw SolverError("non-finite value in cell " + std::to_string(j), static_cast<std::ptrdiff_t>(j));
    }
  }
}

SolutionState Stepper::step(const SolutionState& state, double dt) {
  switch (config_.scheme) {
    case SchemeKind::MH: return mh_step(state, dt);
    case SchemeKind::FO: return fo_step(state, dt);
    case SchemeKind::RK2: return rk2_step(state, dt);
  }
  throw std::logic_error("unhandled scheme");
}

SolutionState Stepper::mh_step(const SolutionState& state, double dt) {
  check_step(state, dt);
  const double lambda = dt / dx();
  extend(state.cells);
  mh_fluxes(lambda);
  SolutionState next{state.t + dt, std::vector<double>(m_)};
  for (std::size_t j = 0; j < m_; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    next.cells[j] = state.cells[j] - lambda * (flux_[jj] - flux_[jj - 1]);
  }
  finish(next.cells);
  return next;
}

SolutionState Stepper::fo_step(const SolutionState& state, double dt) {
  check_step(state, dt);
  const double lambda = dt / dx();
  extend(state.cells);
  fo_fluxes(rho_ext_, lambda, flux_fo_);
  SolutionState next{state.t + dt, std::vector<double>(m_)};
  for (std::size_t j = 0; j < m_; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    next.cells[j] = state.cells[j] - lambda * (flux_fo_[jj] - flux_fo_[jj - 1]);
  }
  finish(next.cells);
  return next;
}

SolutionState Stepper::rk2_step(const SolutionState& state, double dt) {
  check_step(state, dt);
  const double lambda = dt / dx();
  std::vector<double> second;
  euler_stage(state.cells, lambda, stage_);
  finish(stage_);
  euler_stage(stage_, lambda, second);
  SolutionState next{state.t + dt, std::vector<double>(m_)};
  for (std::size_t j = 0; j < m_; ++j) next.cells[j] = 0.5 * (state.cells[j] + second[j]);
  finish(next.cells);
  return next;
}

std::vector<double> Stepper::correction_term(const SolutionState& state, double dt) {
  check_step(state, dt);
  const double lambda = dt / dx();
  extend(state.cells);
  mh_fluxes(lambda);
  fo_fluxes(rho_ext_, lambda, flux_fo_);
  std::vector<double> e;
  e.reserve(m_ + 1);
  for (std::ptrdiff_t j = -1; j < static_cast<std::ptrdiff_t>(m_); ++j) e.push_back(lambda * (flux_[j] - flux_fo_[j]));
  return e;
}

MidTimeFaces Stepper::predictor_faces(const SolutionState& state, double dt) {
  check_step(state, dt);
  extend(state.cells);
  mh_fluxes(dt / dx());
  return half_;
}

SolutionState mh_step(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                      const DiscreteKernel& kernel, BoundaryCondition bc, double dt) {
  return Stepper(config, model, kernel, bc, state.cells.size()).mh_step(state, dt);
}

SolutionState fo_step(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                      const DiscreteKernel& kernel, BoundaryCondition bc, double dt) {
  return Stepper(config, model, kernel, bc, state.cells.size()).fo_step(state, dt);
}

SolutionState rk2_step(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                       const DiscreteKernel& kernel, BoundaryCondition bc, double dt) {
  return Stepper(config, model, kernel, bc, state.cells.size()).rk2_step(state, dt);
}

std::vector<double> correction_term(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                                    const DiscreteKernel& kernel, BoundaryCondition bc, double dt) {
  return Stepper(config, model, kernel, bc, state.cells.size()).correction_term(state, dt);
}

namespace {

void record_state(RunReport& report, const SolutionState& state, double dx) {
  const auto [lo, hi] = std::minmax_element(state.cells.begin(), state.cells.end());
  report.times.push_back(state.t);
  report.mass_series.push_back(mass(state.cells, dx));
  report.min_series.push_back(*lo);
  report.linf_series.push_back(std::max(std::abs(*lo), std::abs(*hi)));
  report.tv_series.push_back(total_variation(state.cells));
}

}  // namespace

AdvanceResult advance_to_time(const SolutionState& initial, double t_final, Stepper& stepper, double dt,
                              const AdvanceOptions& options) {
  if (!(t_final >= initial.t)) throw std::invalid_argument("t_final precedes the initial time");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive and finite");

  AdvanceResult result{initial, {}};
  RunReport& report = result.report;
  const double dx = stepper.dx();
  const double t0 = initial.t;
  record_state(report, initial, dx);

  const double limit = cfl_max_dt(dx, stepper.config().alpha, stepper.model().lip_rho);
  if (dt > limit * (1.0 + cfl_slack)) {
    // Only reachable in force mode; otherwise the first step throws.
    std::ostringstream msg;
    msg << "CFL violated (dt/dx = " << dt / dx << " > " << limit / dx << "); positivity is not guaranteed";
    report.warnings.push_back(msg.str());
  }

  const double span = t_final - t0;
  std::size_t n = span > 0.0 ? static_cast<std::size_t>(std::ceil(span / dt - 1e-9)) : 0;
  if (span > 0.0 && n == 0) n = 1;
  const double linf0 = report.linf_series.front();
  bool box_warned = false;
  bool linf_warned = false;
  std::vector<double> previous;

  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 1; k <= n; ++k) {
    const double t_prev = t0 + static_cast<double>(k - 1) * dt;
    const double t_next = k == n ? t_final : t0 + static_cast<double>(k) * dt;
    const double h = t_next - t_prev;
    if (options.record_correction) {
      const auto e = stepper.correction_term(result.state, h);
      double emax = 0.0;
      for (double v : e) emax = std::max(emax, std::abs(v));
      report.correction_max_series.push_back(emax);
    }
    previous = std::move(result.state.cells);
    SolutionState prev_state{t_prev, previous};
    result.state = stepper.step(prev_state, h);
    result.state.t = t_next;

    double change = 0.0;
    for (std::size_t j = 0; j < previous.size(); ++j) change += std::abs(result.state.cells[j] - previous[j]);
    report.l1_change_series.push_back(dx * change);
    report.step_sizes.push_back(h);
    record_state(report, result.state, dx);

    if (!box_warned) {
      const auto [lo, hi] = std::minmax_element(result.state.cells.begin(), result.state.cells.end());
      const Interval& box = stepper.model().rho_box;
      if (!box.contains(*lo, box_slack) || !box.contains(*hi, box_slack)) {
        std::ostringstream msg;
        msg << "density left [" << box.lo << ", " << box.hi << "] at t = " << t_next << " (range " << *lo << " .. "
            << *hi << ")";
        report.warnings.push_back(msg.str());
        box_warned = true;
      }
    }
    if (options.linf_growth_rate && !linf_warned) {
      const double ceiling = std::exp(*options.linf_growth_rate * (t_next - t0)) * linf0;
      if (report.linf_series.back() > ceiling * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "sup norm " << report.linf_series.back() << " exceeds growth ceiling " << ceiling << " at t = " << t_next;
        report.warnings.push_back(msg.str());
        linf_warned = true;
      }
    }
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace nonlocal
