#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nonlocal/boundary.hpp"
#include "nonlocal/flux.hpp"
#include "nonlocal/initial_conditions.hpp"
#include "nonlocal/kernels.hpp"
#include "nonlocal/schemes.hpp"

namespace nonlocal {

/// How a coarse solution is compared with the fine reference.
enum class ErrorNorm { averaged, exact };

/// dt = value (fixed) or dt = value * dx (ratio).
struct DtRule {
  enum class Kind { fixed, ratio };
  Kind kind = Kind::ratio;
  double value = 0.05;

  double dt(double dx) const noexcept { return kind == Kind::fixed ? value : value * dx; }
};

/// Flat experiment description. Text form, one "key = value" per line,
/// '#' starts a comment:
///
///   scheme = MH              MH | FO | RK2
///   flux = lwr               lwr | linear
///   kernel = poly52          poly52 | cubic | file
///   kernel.a, kernel.b       support of poly52
///   kernel.eta               support width of cubic
///   kernel.file              two-column table for kernel = file
///   ic = sine                sine | amorim_steps | aggarwal_steps | constant | constant(c) | file
///   ic.value, ic.file
///   bc = periodic            periodic | absorbing
///   domain.x_left, domain.x_right
///   theta, alpha
///   slope = standard         standard | entropy
///   K, delta                 entropy slope parameters
///   dt_rule = ratio 0.05     or: fixed 0.001
///   t_final
///   mesh_list = 10 20 40     cell counts, coarse to fine
///   reference_M = 640
///   error_norm = averaged    averaged | exact
struct ExperimentConfig {
  std::string scheme = "MH";
  std::string flux = "lwr";
  std::string kernel = "poly52";
  double kernel_a = 0.0;
  double kernel_b = 0.25;
  double kernel_eta = 0.1;
  std::filesystem::path kernel_file;
  std::string ic = "sine";
  double ic_value = 0.0;
  std::filesystem::path ic_file;
  BoundaryCondition bc = BoundaryCondition::periodic;
  double x_left = -1.0;
  double x_right = 1.0;
  double theta = 0.5;
  double alpha = 0.16;
  std::string slope = "standard";
  double K = 1.0;
  double delta = 0.5;
  DtRule dt_rule;
  double t_final = 0.15;
  std::vector<std::size_t> mesh_list;
  std::optional<std::size_t> reference_M;
  ErrorNorm error_norm = ErrorNorm::averaged;

  SchemeKind scheme_kind() const;
  SchemeConfig scheme_config() const;
  FluxModel flux_model() const;
  KernelSpec kernel_spec() const;
  InitialCondition initial_condition() const;
  Grid grid(std::size_t num_cells) const;

  /// Range and consistency checks; throws ConfigError naming the field.
  void validate() const;

  /// Canonical text of every field that influences the reference solution
  /// (everything except mesh_list, scheme and error_norm), including the
  /// contents of referenced files.
  std::string reference_key() const;
};

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::string& bytes) noexcept;

}  // namespace nonlocal
