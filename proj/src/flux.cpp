#include "nonlocal/flux.hpp"

#include <stdexcept>

namespace nonlocal {

FluxModel builtin_lwr() {
  FluxModel m;
  m.name = "lwr";
  m.eval = [](double rho, double a) { return rho * (1.0 - rho) * (1.0 - a); };
  m.d_rho = [](double rho, double a) { return (1.0 - 2.0 * rho) * (1.0 - a); };
  m.lip_rho = 1.0;
  // |df/dA| = |rho| |1 - rho| <= |rho| on the box, d2f/dA2 = 0
  m.m_const = 1.0;
  m.rho_box = {0.0, 1.0};
  m.a_box = {0.0, 1.0};
  return m;
}

FluxModel builtin_linear() {
  FluxModel m;
  m.name = "linear";
  m.eval = [](double rho, double a) { return rho * (1.0 - a); };
  m.d_rho = [](double, double a) { return 1.0 - a; };
  m.lip_rho = 1.0;
  m.m_const = 1.0;
  m.rho_box = {0.0, 1.0};
  m.a_box = {0.0, 1.0};
  return m;
}

double lax_friedrichs_flux(const FluxModel& model, double u, double v, double a, double alpha, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lax_friedrichs_flux needs lambda > 0");
  return 0.5 * (model.eval(u, a) + model.eval(v, a)) - alpha * (v - u) / (2.0 * lambda);
}

}  // namespace nonlocal
