#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nonlocal/offset_array.hpp"

namespace nonlocal {

/// ((x-a)(b-x))^{5/2} on [a, b].
struct Poly52Shape {
  double a = 0.0;
  double b = 0.25;
};

/// (-x(eta+x))^3 on [-eta, 0].
struct CubicShape {
  double eta = 0.1;
};

/// Arbitrary nonnegative profile on [a, b]. When built from a table the
/// nodes are kept so integrals and slopes can be taken exactly.
struct TabulatedShape {
  double a = 0.0;
  double b = 1.0;
  std::function<double(double)> evaluator;
  std::vector<double> nodes_x;
  std::vector<double> nodes_y;
};

using KernelShape = std::variant<Poly52Shape, CubicShape, TabulatedShape>;

/// Integral of the unnormalized shape over its support.
double normalization_constant(const KernelShape& shape);

std::pair<double, double> support_extent(const KernelShape& shape);

/// A compactly supported, nonnegative kernel scaled to unit integral.
class KernelSpec {
public:
  explicit KernelSpec(KernelShape shape);

  static KernelSpec poly52(double a, double b) { return KernelSpec(Poly52Shape{a, b}); }
  static KernelSpec cubic(double eta) { return KernelSpec(CubicShape{eta}); }
  /// Piecewise-linear interpolant of (x, mu) pairs; the support is [x.front(), x.back()].
  static KernelSpec tabulated(std::vector<double> x, std::vector<double> mu);
  static KernelSpec tabulated(double a, double b, std::function<double(double)> evaluator);

  double operator()(double x) const;
  double derivative(double x) const;

  const KernelShape& shape() const noexcept { return shape_; }
  double normalization() const noexcept { return norm_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  /// sup |mu'| over the support (closed form for the analytic shapes).
  double derivative_sup_norm() const;
  /// sup |mu|.
  double sup_norm() const;
  std::string name() const;
  /// False when the kernel is known to violate C^2 regularity (tabulated
  /// profiles that do not vanish at the support ends).
  bool smooth() const noexcept { return smooth_; }

private:
  KernelShape shape_;
  double norm_ = 1.0;
  double a_ = 0.0;
  double b_ = 0.0;
  bool smooth_ = true;
};

/// Samples mu_k = mu(k dx) for k*dx in [a - dx, b + dx].
struct DiscreteKernel {
  OffsetArray samples;
  double dx = 0.0;
  /// ceil((b - a) / dx)
  std::ptrdiff_t ghost_count = 0;
  /// Smallest and largest k with a nonzero sample; nz_first > nz_last if none.
  std::ptrdiff_t nz_first = 0;
  std::ptrdiff_t nz_last = -1;
  /// Non-empty when the mesh is too coarse to resolve the kernel.
  std::string warning;

  double operator[](std::ptrdiff_t k) const noexcept {
    return (k < samples.first() || k > samples.last()) ? 0.0 : samples[k];
  }
  bool empty() const noexcept { return nz_first > nz_last; }
};

DiscreteKernel sample_kernel(const KernelSpec& spec, double dx);

/// Two-column text file "x mu(x)", '#' comments allowed.
KernelSpec load_tabulated_kernel(const std::filesystem::path& path);

}  // namespace nonlocal
