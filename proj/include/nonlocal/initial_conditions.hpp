#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "nonlocal/mesh.hpp"

namespace nonlocal {

/// Initial datum rho_0. Breakpoints mark jumps or kinks; cell averages are
/// integrated piece by piece between them, so piecewise polynomial data of
/// degree <= 9 is averaged exactly.
struct InitialCondition {
  std::string name;
  std::function<double(double)> value;
  std::vector<double> breakpoints;
};

/// 0.5 + 0.4 sin(pi x)
InitialCondition sine_ic();
/// 1/2 on [-2.8,-1.8], 3/4 on [-1.2,-0.2], 3/4 on [0.6,1.0], 1 on [1.5, inf)
InitialCondition amorim_steps_ic();
/// 0.25 on [-0.9, 0.1], 0.5 on (0.1, 0.3], 0 elsewhere
InitialCondition aggarwal_steps_ic();
InitialCondition constant_ic(double c);
/// Piecewise-linear interpolant of a two-column "x rho" file, 0 outside.
InitialCondition file_ic(const std::filesystem::path& path);

struct SolutionState {
  double t = 0.0;
  std::vector<double> cells;
};

/// Cell averages of ic at t = 0 by 5-point Gauss-Legendre per sub-interval.
/// Throws std::invalid_argument on non-finite values.
SolutionState init_cell_averages(const InitialCondition& ic, const Grid& grid);

}  // namespace nonlocal
