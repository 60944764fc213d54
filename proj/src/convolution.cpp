#include "nonlocal/convolution.hpp"

#include <stdexcept>

namespace nonlocal {

KernelWindow kernel_window(const DiscreteKernel& kernel) noexcept {
  if (kernel.empty()) return {0, 0};
  return {kernel.nz_first, kernel.nz_last};
}

void cell_center_convolution_into(OffsetArray& out, const OffsetArray& rho_ext, const DiscreteKernel& kernel,
                                  std::ptrdiff_t lo, std::ptrdiff_t hi) {
  out.reset(lo, hi);
  if (kernel.empty()) return;
  const auto [k0, k1] = kernel_window(kernel);
  if (!rho_ext.covers(lo - k1, hi - k0)) throw std::invalid_argument("cell_center_convolution: insufficient halo");
  const double dx = kernel.dx;
  for (std::ptrdiff_t j = lo; j <= hi; ++j) {
    double sum = 0.0;
    for (std::ptrdiff_t l = j - k1; l <= j - k0; ++l) sum += kernel.samples[j - l] * rho_ext[l];
    out[j] = dx * sum;
  }
}

OffsetArray cell_center_convolution(const OffsetArray& rho_ext, const DiscreteKernel& kernel, std::ptrdiff_t lo,
                                    std::ptrdiff_t hi) {
  OffsetArray out;
  cell_center_convolution_into(out, rho_ext, kernel, lo, hi);
  return out;
}

void convolution_slopes_into(OffsetArray& out, const OffsetArray& a_center, double theta, std::ptrdiff_t lo,
                             std::ptrdiff_t hi) {
  if (!a_center.covers(lo - 1, hi + 1)) throw std::invalid_argument("convolution_slopes: one-cell halo missing");
  out.reset(lo, hi);
  for (std::ptrdiff_t j = lo; j <= hi; ++j) out[j] = theta * (a_center[j + 1] - a_center[j - 1]);
}

OffsetArray convolution_slopes(const OffsetArray& a_center, double theta, std::ptrdiff_t lo, std::ptrdiff_t hi) {
  OffsetArray out;
  convolution_slopes_into(out, a_center, theta, lo, hi);
  return out;
}

OffsetArray convolution_slopes(const OffsetArray& a_center, double theta) {
  return convolution_slopes(a_center, theta, a_center.first() + 1, a_center.last() - 1);
}

void interface_convolutions_into(OffsetArray& a_minus, OffsetArray& a_plus, const OffsetArray& a_center,
                                 const OffsetArray& s) {
  const std::ptrdiff_t lo = std::max(a_center.first(), s.first());
  const std::ptrdiff_t hi = std::min(a_center.last(), s.last());
  a_minus.reset(lo, hi);
  a_plus.reset(lo, hi);
  for (std::ptrdiff_t j = lo; j <= hi; ++j) {
    a_minus[j] = a_center[j] + 0.5 * s[j];
    a_plus[j] = a_center[j] - 0.5 * s[j];
  }
}

void midtime_convolution_into(OffsetArray& out, const OffsetArray& face_plus, const OffsetArray& face_minus,
                              const DiscreteKernel& kernel, std::ptrdiff_t lo, std::ptrdiff_t hi) {
  out.reset(lo, hi);
  if (kernel.empty()) return;
  const auto [k0, k1] = kernel_window(kernel);
  // l runs over the union of both stencils; samples are padded by one on each side.
  if (!face_plus.covers(lo - k1, hi + 1 - k0) || !face_minus.covers(lo - k1, hi + 1 - k0)) {
    throw std::invalid_argument("midtime_convolution: insufficient halo");
  }
  const double half_dx = 0.5 * kernel.dx;
  const OffsetArray& mu = kernel.samples;
  for (std::ptrdiff_t j = lo; j <= hi; ++j) {
    double sum = 0.0;
    for (std::ptrdiff_t l = j - k1; l <= j + 1 - k0; ++l) {
      sum += mu[j + 1 - l] * face_plus[l] + mu[j - l] * face_minus[l];
    }
    out[j] = half_dx * sum;
  }
}

OffsetArray midtime_convolution(const OffsetArray& face_plus, const OffsetArray& face_minus,
                                const DiscreteKernel& kernel, std::ptrdiff_t lo, std::ptrdiff_t hi) {
  OffsetArray out;
  midtime_convolution_into(out, face_plus, face_minus, kernel, lo, hi);
  return out;
}

void fo_interface_convolution_into(OffsetArray& out, const OffsetArray& rho_ext, const DiscreteKernel& kernel,
                                   std::ptrdiff_t lo, std::ptrdiff_t hi) {
  out.reset(lo, hi);
  if (kernel.empty()) return;
  const auto [k0, k1] = kernel_window(kernel);
  if (!rho_ext.covers(lo - k1, hi + 1 - k0)) throw std::invalid_argument("fo_interface_convolution: insufficient halo");
  const double half_dx = 0.5 * kernel.dx;
  const OffsetArray& mu = kernel.samples;
  for (std::ptrdiff_t j = lo; j <= hi; ++j) {
    double sum = 0.0;
    for (std::ptrdiff_t l = j - k1; l <= j + 1 - k0; ++l) {
      sum += mu[j + 1 - l] * rho_ext[l] + mu[j - l] * rho_ext[l];
    }
    out[j] = half_dx * sum;
  }
}

OffsetArray fo_interface_convolution(const OffsetArray& rho_ext, const DiscreteKernel& kernel, std::ptrdiff_t lo,
                                     std::ptrdiff_t hi) {
  OffsetArray out;
  fo_interface_convolution_into(out, rho_ext, kernel, lo, hi);
  return out;
}

}  // namespace nonlocal
