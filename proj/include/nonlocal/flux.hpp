#pragma once

#include <functional>
#include <string>
#include <utility>

namespace nonlocal {

/// Closed interval used for the state box a flux model declares.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool contains(double v, double slack = 0.0) const noexcept { return v >= lo - slack && v <= hi + slack; }
};

/// Flux f(rho, A) of the non-local law together with the bounds the CFL
/// rule and the stability diagnostics rely on.
///
/// lip_rho bounds |df/drho| and m_const bounds |df/dA|/|rho| (and
/// |d2f/dA2|/|rho|) over rho_box x a_box. Both are declared by whoever builds
/// the model; nothing here estimates them.
struct FluxModel {
  std::string name;
  std::function<double(double, double)> eval;
  std::function<double(double, double)> d_rho;
  double lip_rho = 1.0;
  double m_const = 1.0;
  Interval rho_box;
  Interval a_box;

  double operator()(double rho, double a) const { return eval(rho, a); }
};

/// f = rho (1 - rho) (1 - A)
FluxModel builtin_lwr();

/// f = rho (1 - A)
FluxModel builtin_linear();

/// Lax-Friedrichs-type two-point flux
///   F(u, v, A) = (f(u, A) + f(v, A)) / 2 - alpha (v - u) / (2 lambda).
double lax_friedrichs_flux(const FluxModel& model, double u, double v, double a, double alpha, double lambda);

}  // namespace nonlocal
