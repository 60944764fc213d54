#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

#include "nonlocal/offset_array.hpp"

namespace nonlocal {

/// Slope limiter selection. The entropy variant adds the mesh-dependent
/// fourth argument sgn(rho_{j+1} - rho_j) K dx^delta to the minmod.
struct SlopeMode {
  enum class Kind { standard, entropy };

  Kind kind = Kind::standard;
  double theta = 0.5;
  double K = 1.0;
  double delta = 0.5;

  static SlopeMode standard(double theta = 0.5);
  static SlopeMode entropy(double theta, double K, double delta);

  /// Throws std::invalid_argument on theta outside [0, 0.5], K <= 0 or delta outside (0, 1).
  void validate() const;
};

/// Returns the minimum if every value is positive, the maximum if every
/// value is negative, 0 otherwise (a zero argument forces 0).
double minmod(std::span<const double> values);

inline double minmod(double a, double b, double c) noexcept {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

inline double minmod(double a, double b, double c, double d) noexcept {
  if (a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0) return std::min({a, b, c, d});
  if (a < 0.0 && b < 0.0 && c < 0.0 && d < 0.0) return std::max({a, b, c, d});
  return 0.0;
}

/// Undivided limited slope of cell j from its two neighbours.
inline double limited_slope(double left, double centre, double right, const SlopeMode& mode, double entropy_cap) noexcept {
  const double dm = centre - left;
  const double dp = right - centre;
  const double dc = 0.5 * (right - left);
  if (mode.kind == SlopeMode::Kind::entropy) {
    const double cap = dp > 0.0 ? entropy_cap : (dp < 0.0 ? -entropy_cap : 0.0);
    return 2.0 * mode.theta * minmod(dm, dc, dp, cap);
  }
  return 2.0 * mode.theta * minmod(dm, dc, dp);
}

/// sigma_j for j in [lo, hi]; rho_ext must cover [lo - 1, hi + 1].
void slopes_into(OffsetArray& out, const OffsetArray& rho_ext, const SlopeMode& mode, double dx, std::ptrdiff_t lo,
                 std::ptrdiff_t hi);
OffsetArray slopes(const OffsetArray& rho_ext, const SlopeMode& mode, double dx, std::ptrdiff_t lo, std::ptrdiff_t hi);

/// Slopes on every cell of rho_ext that has both neighbours.
OffsetArray slopes(const OffsetArray& rho_ext, const SlopeMode& mode, double dx);

/// Face values of the piecewise-linear reconstruction, both aligned to the
/// owning cell j: minus[j] is the value at x_{j+1/2} seen from cell j,
/// plus[j] the value at x_{j-1/2} seen from cell j.
struct FaceValues {
  OffsetArray minus;
  OffsetArray plus;
};

FaceValues face_values(const OffsetArray& rho, const OffsetArray& sigma);
void face_values_into(FaceValues& out, const OffsetArray& rho, const OffsetArray& sigma);

}  // namespace nonlocal
