#include "nonlocal/initial_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nonlocal/quadrature.hpp"

namespace nonlocal {

namespace {

double indicator(double x, double lo, double hi) { return (x >= lo && x <= hi) ? 1.0 : 0.0; }

}  // namespace

InitialCondition sine_ic() {
  return {"sine", [](double x) { return 0.5 + 0.4 * std::sin(std::numbers::pi * x); }, {}};
}

InitialCondition amorim_steps_ic() {
  return {"amorim_steps",
          [](double x) {
            return 0.5 * indicator(x, -2.8, -1.8) + 0.75 * indicator(x, -1.2, -0.2) + 0.75 * indicator(x, 0.6, 1.0) +
                   (x >= 1.5 ? 1.0 : 0.0);
          },
          {-2.8, -1.8, -1.2, -0.2, 0.6, 1.0, 1.5}};
}

InitialCondition aggarwal_steps_ic() {
  return {"aggarwal_steps",
          [](double x) {
            if (x >= -0.9 && x <= 0.1) return 0.25;
            if (x > 0.1 && x <= 0.3) return 0.5;
            return 0.0;
          },
          {-0.9, 0.1, 0.3}};
}

InitialCondition constant_ic(double c) {
  return {"constant", [c](double) { return c; }, {}};
}

InitialCondition file_ic(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open initial-condition file " + path.string());
  std::vector<double> xs;
  std::vector<double> ys;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double x = 0.0;
    double y = 0.0;
    if (row >> x >> y) {
      if (!xs.empty() && !(x > xs.back())) throw std::runtime_error("initial-condition abscissae must increase");
      xs.push_back(x);
      ys.push_back(y);
    }
  }
  if (xs.size() < 2) throw std::runtime_error("initial-condition file needs at least two rows");
  InitialCondition ic;
  ic.name = "file";
  ic.breakpoints = xs;
  ic.value = [xs, ys](double x) {
    if (x < xs.front() || x > xs.back()) return 0.0;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.end()) return ys.back();
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
  };
  return ic;
}

SolutionState init_cell_averages(const InitialCondition& ic, const Grid& grid) {
  if (!ic.value) throw std::invalid_argument("initial condition has no value function");
  std::vector<double> breaks = ic.breakpoints;
  std::sort(breaks.begin(), breaks.end());

  SolutionState state;
  state.cells.resize(grid.num_cells);
  for (std::size_t j = 0; j < grid.num_cells; ++j) {
    const double lo = grid.x_left + static_cast<double>(j) * grid.dx;
    const double hi = grid.x_left + static_cast<double>(j + 1) * grid.dx;
    double integral = 0.0;
    double start = lo;
    for (auto it = std::upper_bound(breaks.begin(), breaks.end(), lo); it != breaks.end() && *it < hi; ++it) {
      integral += quadrature::gauss_legendre_5(ic.value, start, *it);
      start = *it;
    }
    integral += quadrature::gauss_legendre_5(ic.value, start, hi);
    const double avg = integral / (hi - lo);
    if (!std::isfinite(avg)) {
      throw std::invalid_argument("initial condition is not finite in cell " + std::to_string(j));
    }
    state.cells[j] = avg;
  }
  return state;
}

}  // namespace nonlocal
