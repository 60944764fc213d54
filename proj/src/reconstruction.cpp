#include "nonlocal/reconstruction.hpp"

#include <cmath>
#include <stdexcept>

namespace nonlocal {

SlopeMode SlopeMode::standard(double theta) {
  SlopeMode m;
  m.theta = theta;
  m.validate();
  return m;
}

SlopeMode SlopeMode::entropy(double theta, double K, double delta) {
  SlopeMode m;
  m.kind = Kind::entropy;
  m.theta = theta;
  m.K = K;
  m.delta = delta;
  m.validate();
  return m;
}

void SlopeMode::validate() const {
  if (!(theta >= 0.0 && theta <= 0.5)) throw std::invalid_argument("theta must lie in [0, 0.5]");
  if (kind == Kind::entropy) {
    if (!(K > 0.0) || !std::isfinite(K)) throw std::invalid_argument("entropy slope constant K must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("entropy slope exponent delta must lie in (0, 1)");
  }
}

double minmod(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("minmod of an empty sequence");
  bool all_pos = true;
  bool all_neg = true;
  for (double v : values) {
    all_pos = all_pos && v > 0.0;
    all_neg = all_neg && v < 0.0;
  }
  if (all_pos) return *std::min_element(values.begin(), values.end());
  if (all_neg) return *std::max_element(values.begin(), values.end());
  return 0.0;
}

void slopes_into(OffsetArray& out, const OffsetArray& rho_ext, const SlopeMode& mode, double dx, std::ptrdiff_t lo,
                 std::ptrdiff_t hi) {
  if (!rho_ext.covers(lo - 1, hi + 1)) throw std::invalid_argument("slopes: one-cell halo missing");
  const double cap = mode.kind == SlopeMode::Kind::entropy ? mode.K * std::pow(dx, mode.delta) : 0.0;
  out.reset(lo, hi);
  for (std::ptrdiff_t j = lo; j <= hi; ++j) {
    out[j] = limited_slope(rho_ext[j - 1], rho_ext[j], rho_ext[j + 1], mode, cap);
  }
}

OffsetArray slopes(const OffsetArray& rho_ext, const SlopeMode& mode, double dx, std::ptrdiff_t lo, std::ptrdiff_t hi) {
  OffsetArray sigma;
  slopes_into(sigma, rho_ext, mode, dx, lo, hi);
  return sigma;
}

OffsetArray slopes(const OffsetArray& rho_ext, const SlopeMode& mode, double dx) {
  return slopes(rho_ext, mode, dx, rho_ext.first() + 1, rho_ext.last() - 1);
}

void face_values_into(FaceValues& out, const OffsetArray& rho, const OffsetArray& sigma) {
  const std::ptrdiff_t lo = std::max(rho.first(), sigma.first());
  const std::ptrdiff_t hi = std::min(rho.last(), sigma.last());
  out.minus.reset(lo, hi);
  out.plus.reset(lo, hi);
  for (std::ptrdiff_t j = lo; j <= hi; ++j) {
    out.minus[j] = rho[j] + 0.5 * sigma[j];
    out.plus[j] = rho[j] - 0.5 * sigma[j];
  }
}

FaceValues face_values(const OffsetArray& rho, const OffsetArray& sigma) {
  FaceValues f;
  face_values_into(f, rho, sigma);
  return f;
}

}  // namespace nonlocal
