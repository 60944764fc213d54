#include "nonlocal/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace nonlocal {

double l1_norm(std::span<const double> cells, double dx) {
  double sum = 0.0;
  for (double v : cells) sum += std::abs(v);
  return dx * sum;
}

double mass(std::span<const double> cells, double dx) {
  double sum = 0.0;
  for (double v : cells) sum += v;
  return dx * sum;
}

double total_variation(std::span<const double> cells) {
  double tv = 0.0;
  for (std::size_t j = 1; j < cells.size(); ++j) tv += std::abs(cells[j] - cells[j - 1]);
  return tv;
}

namespace {

std::size_t nesting_ratio(std::span<const double> coarse, const Grid& coarse_grid, std::span<const double> reference,
                          const Grid& reference_grid) {
  if (coarse.size() != coarse_grid.num_cells || reference.size() != reference_grid.num_cells) {
    throw std::invalid_argument("reference comparison: state length does not match its grid");
  }
  const double tol = 1e-12 * std::max(1.0, coarse_grid.length());
  if (std::abs(coarse_grid.x_left - reference_grid.x_left) > tol ||
      std::abs(coarse_grid.x_right - reference_grid.x_right) > tol) {
    throw std::invalid_argument("reference comparison: grids do not share endpoints");
  }
  if (reference_grid.num_cells % coarse_grid.num_cells != 0) {
    throw std::invalid_argument("reference comparison: meshes are not nested (" +
                                std::to_string(reference_grid.num_cells) + " is not a multiple of " +
                                std::to_string(coarse_grid.num_cells) + ")");
  }
  return reference_grid.num_cells / coarse_grid.num_cells;
}

}  // namespace

double l1_distance_to_reference(std::span<const double> coarse, const Grid& coarse_grid,
                                std::span<const double> reference, const Grid& reference_grid) {
  const std::size_t ratio = nesting_ratio(coarse, coarse_grid, reference, reference_grid);
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) sum += std::abs(coarse[i / ratio] - reference[i]);
  return reference_grid.dx * sum;
}

double l1_distance_to_averaged_reference(std::span<const double> coarse, const Grid& coarse_grid,
                                         std::span<const double> reference, const Grid& reference_grid) {
  const std::size_t ratio = nesting_ratio(coarse, coarse_grid, reference, reference_grid);
  double sum = 0.0;
  for (std::size_t j = 0; j < coarse.size(); ++j) {
    double avg = 0.0;
    for (std::size_t k = j * ratio; k < (j + 1) * ratio; ++k) avg += reference[k];
    sum += std::abs(coarse[j] - avg / static_cast<double>(ratio));
  }
  return coarse_grid.dx * sum;
}

double eoa(double err_coarse, double err_fine) {
  if (!(err_coarse > 0.0) || !(err_fine > 0.0)) throw std::invalid_argument("eoa needs positive errors");
  return std::log2(err_coarse / err_fine);
}

double linf_growth_rate(double alpha, double lambda, double lip_rho, double m_const, double theta,
                        double kernel_derivative_norm, double initial_l1) {
  const double ll = lambda * lip_rho;
  return (alpha + ll + (1.0 + ll) * (1.0 + ll)) * m_const * (1.0 + theta) * (1.0 + theta) * kernel_derivative_norm *
         initial_l1;
}

}  // namespace nonlocal
