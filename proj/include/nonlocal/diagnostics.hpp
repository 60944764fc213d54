#pragma once

#include <span>
#include <string>
#include <vector>

#include "nonlocal/mesh.hpp"

namespace nonlocal {

/// Per-run history. The state series (times, mass, min, linf, tv) hold one
/// entry for the initial state plus one per step; the increment series
/// (l1_change, correction_max) hold one entry per step.
struct RunReport {
  std::vector<double> times;
  std::vector<double> mass_series;
  std::vector<double> min_series;
  std::vector<double> linf_series;
  std::vector<double> tv_series;
  /// ||rho^{n+1} - rho^n||_{L1} for each step.
  std::vector<double> l1_change_series;
  /// max_j |e_{j+1/2}| per step; empty unless requested.
  std::vector<double> correction_max_series;
  std::vector<double> step_sizes;
  double wall_time = 0.0;
  std::vector<std::string> warnings;

  std::size_t steps() const noexcept { return step_sizes.size(); }
};

/// dx * sum |rho_j|
double l1_norm(std::span<const double> cells, double dx);

/// dx * sum rho_j
double mass(std::span<const double> cells, double dx);

/// sum |rho_{j+1} - rho_j|; 0 for fewer than two cells.
double total_variation(std::span<const double> cells);

/// Exact L1 distance between two piecewise-constant functions on nested
/// meshes. The reference mesh must refine the coarse one by an integer factor
/// and both must share their endpoints; throws std::invalid_argument otherwise.
double l1_distance_to_reference(std::span<const double> coarse, const Grid& coarse_grid,
                                std::span<const double> reference, const Grid& reference_grid);

/// L1 distance between the coarse cell averages and the reference averaged
/// onto the coarse cells, dx * sum_j |rho_j - mean of the reference over cell j|.
/// Unlike the exact distance above this excludes the O(dx) error of
/// representing a smooth profile by coarse constants. Same nesting rules.
double l1_distance_to_averaged_reference(std::span<const double> coarse, const Grid& coarse_grid,
                                         std::span<const double> reference, const Grid& reference_grid);

/// log2(err_coarse / err_fine); both errors must be positive.
double eoa(double err_coarse, double err_fine);

/// Exponential growth rate of the L-infinity ceiling,
///   [alpha + lambda L + (1 + lambda L)^2] M (1 + theta)^2 ||mu'|| ||rho0||_{L1},
/// so that max |rho^n| <= exp(rate t^n) ||rho0||_inf.
double linf_growth_rate(double alpha, double lambda, double lip_rho, double m_const, double theta,
                        double kernel_derivative_norm, double initial_l1);

}  // namespace nonlocal
