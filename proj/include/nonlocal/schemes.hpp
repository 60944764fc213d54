#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "nonlocal/boundary.hpp"
#include "nonlocal/convolution.hpp"
#include "nonlocal/diagnostics.hpp"
#include "nonlocal/flux.hpp"
#include "nonlocal/initial_conditions.hpp"
#include "nonlocal/kernels.hpp"
#include "nonlocal/reconstruction.hpp"

namespace nonlocal {

enum class SchemeKind { MH, FO, RK2 };

SchemeKind parse_scheme(std::string_view name);
std::string_view to_string(SchemeKind kind) noexcept;

struct SchemeConfig {
  SchemeKind scheme = SchemeKind::MH;
  double alpha = 0.16;
  SlopeMode slope;

  double theta() const noexcept { return slope.theta; }
  /// Throws std::invalid_argument for alpha outside (0, 8/27) or a bad slope mode.
  void validate() const;
};

/// Half-step face values from the Taylor predictor, aligned to the owning
/// cell like FaceValues: minus[j] at x_{j+1/2}, plus[j] at x_{j-1/2}.
struct MidTimeFaces {
  OffsetArray minus;
  OffsetArray plus;
};

/// D_j = f(rho^-_j, A^-_j) - f(rho^+_j, A^+_j); both faces move by -lambda/2 D_j.
/// Computed on the common range of the face and convolution arrays.
MidTimeFaces predictor(const FaceValues& faces, const ConvolutionFields& conv, const FluxModel& model, double lambda);

/// One solver instance: owns the step workspace, so it is not shareable
/// between threads. The kernel must be sampled on the same dx as the grid.
class Stepper {
public:
  Stepper(SchemeConfig config, FluxModel model, DiscreteKernel kernel, BoundaryCondition bc, std::size_t num_cells,
          bool force = false);

  const SchemeConfig& config() const noexcept { return config_; }
  const FluxModel& model() const noexcept { return model_; }
  const DiscreteKernel& kernel() const noexcept { return kernel_; }
  BoundaryCondition boundary() const noexcept { return bc_; }
  std::size_t num_cells() const noexcept { return m_; }
  double dx() const noexcept { return kernel_.dx; }
  /// Ghost cells added on each side before every stage.
  std::ptrdiff_t halo() const noexcept { return halo_; }

  /// Advance by dt with the configured scheme.
  SolutionState step(const SolutionState& state, double dt);
  SolutionState mh_step(const SolutionState& state, double dt);
  SolutionState fo_step(const SolutionState& state, double dt);
  SolutionState rk2_step(const SolutionState& state, double dt);

  /// lambda (F_MH - F_FO) at the interfaces j+1/2, j = -1..M-1 (M+1 values,
  /// index 0 of the result is the left boundary interface).
  std::vector<double> correction_term(const SolutionState& state, double dt);

  /// Predictor faces of the current state (for inspection).
  MidTimeFaces predictor_faces(const SolutionState& state, double dt);

private:
  void check_step(const SolutionState& state, double dt) const;
  void extend(const std::vector<double>& cells);
  void mh_fluxes(double lambda);
  void fo_fluxes(const OffsetArray& rho_ext, double lambda, OffsetArray& out);
  void euler_stage(const std::vector<double>& cells, double lambda, std::vector<double>& out);
  void finish(std::vector<double>& cells) const;

  SchemeConfig config_;
  FluxModel model_;
  DiscreteKernel kernel_;
  BoundaryCondition bc_;
  std::size_t m_;
  bool force_;
  std::ptrdiff_t k0_ = 0;
  std::ptrdiff_t k1_ = 0;
  std::ptrdiff_t p_lo_ = 0;
  std::ptrdiff_t p_hi_ = 0;
  std::ptrdiff_t halo_ = 1;

  OffsetArray rho_ext_;
  OffsetArray sigma_;
  FaceValues faces_;
  ConvolutionFields conv_;
  MidTimeFaces half_;
  OffsetArray a_half_;
  OffsetArray a_fo_;
  OffsetArray flux_;
  OffsetArray flux_fo_;
  std::vector<double> stage_;
};

/// Single steps on a fresh solver instance.
SolutionState mh_step(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                      const DiscreteKernel& kernel, BoundaryCondition bc, double dt);
SolutionState fo_step(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                      const DiscreteKernel& kernel, BoundaryCondition bc, double dt);
SolutionState rk2_step(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                       const DiscreteKernel& kernel, BoundaryCondition bc, double dt);
std::vector<double> correction_term(const SolutionState& state, const SchemeConfig& config, const FluxModel& model,
                                    const DiscreteKernel& kernel, BoundaryCondition bc, double dt);

struct AdvanceOptions {
  /// Record max_j |e_{j+1/2}| each step (costs one extra flux pass).
  bool record_correction = false;
  /// If set, warn when max |rho^n| exceeds exp(rate t^n) ||rho^0||_inf.
  std::optional<double> linf_growth_rate;
};

struct AdvanceResult {
  SolutionState state;
  RunReport report;
};

/// Constant steps of dt with a shortened last step landing on t_final.
/// Step k ends at t0 + k dt, the last at t_final exactly.
AdvanceResult advance_to_time(const SolutionState& initial, double t_final, Stepper& stepper, double dt,
                              const AdvanceOptions& options = {});

}  // namespace nonlocal
