#pragma once

#include <array>
#include <cstddef>

namespace nonlocal {

/// Uniform partition of [x_left, x_right] into num_cells cells.
///
/// Cells are 0-based here: cell j spans [x_left + j*dx, x_left + (j+1)*dx].
struct Grid {
  double x_left = 0.0;
  double x_right = 1.0;
  std::size_t num_cells = 1;
  double dx = 1.0;

  double length() const noexcept { return x_right - x_left; }
  double center(std::ptrdiff_t j) const noexcept { return x_left + (static_cast<double>(j) + 0.5) * dx; }
  /// Position of interface j+1/2 (right face of cell j).
  double interface(std::ptrdiff_t j) const noexcept { return x_left + static_cast<double>(j + 1) * dx; }
};

/// Constant time step for a run; lambda is always derived from dt and dx.
class TimeControls {
public:
  TimeControls(double dt, double t_final, double dx);

  double dt() const noexcept { return dt_; }
  double t_final() const noexcept { return t_final_; }
  double dx() const noexcept { return dx_; }
  double lambda() const noexcept { return dt_ / dx_; }

private:
  double dt_;
  double t_final_;
  double dx_;
};

Grid build_grid(double x_left, double x_right, std::size_t num_cells);

/// The three admissible-ratio terms of the positivity CFL condition,
/// (8 - 27 alpha) / (27 L), 2 / (27 L) and alpha / L, with L = lip_rho.
std::array<double, 3> cfl_bracket_terms(double alpha, double lip_rho);

/// Index (0, 1 or 2) of the smallest bracket term.
std::size_t cfl_binding_term(double alpha, double lip_rho);

/// Largest admissible dt: dx times the smallest bracket term.
double cfl_max_dt(double dx, double alpha, double lip_rho);

bool check_cfl(double dt, double dx, double alpha, double lip_rho);

}  // namespace nonlocal
