#include "nonlocal/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nonlocal {

namespace {

void require_alpha_and_lip(double alpha, double lip_rho) {
  if (!(alpha > 0.0 && alpha < 8.0 / 27.0)) {
    throw std::invalid_argument("alpha must lie in (0, 8/27), got " + std::to_string(alpha));
  }
  if (!(lip_rho > 0.0) || !std::isfinite(lip_rho)) {
    throw std::invalid_argument("lip_rho must be positive and finite");
  }
}

}  // namespace

TimeControls::TimeControls(double dt, double t_final, double dx) : dt_(dt), t_final_(t_final), dx_(dx) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive and finite");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw std::invalid_argument("t_final must be >= 0");
  if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
}

Grid build_grid(double x_left, double x_right, std::size_t num_cells) {
  if (!std::isfinite(x_left) || !std::isfinite(x_right)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (!(x_right > x_left)) throw std::invalid_argument("grid requires x_right > x_left");
  if (num_cells == 0) throw std::invalid_argument("grid requires at least one cell");
  Grid g;
  g.x_left = x_left;
  g.x_right = x_right;
  g.num_cells = num_cells;
  g.dx = (x_right - x_left) / static_cast<double>(num_cells);
  return g;
}

std::array<double, 3> cfl_bracket_terms(double alpha, double lip_rho) {
  require_alpha_and_lip(alpha, lip_rho);
  return {(8.0 - 27.0 * alpha) / (27.0 * lip_rho), 2.0 / (27.0 * lip_rho), alpha / lip_rho};
}

std::size_t cfl_binding_term(double alpha, double lip_rho) {
  const auto terms = cfl_bracket_terms(alpha, lip_rho);
  return static_cast<std::size_t>(std::min_element(terms.begin(), terms.end()) - terms.begin());
}

double cfl_max_dt(double dx, double alpha, double lip_rho) {
  if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
  const auto terms = cfl_bracket_terms(alpha, lip_rho);
  return dx * *std::min_element(terms.begin(), terms.end());
}

bool check_cfl(double dt, double dx, double alpha, double lip_rho) {
  return dt <= cfl_max_dt(dx, alpha, lip_rho);
}

}  // namespace nonlocal
