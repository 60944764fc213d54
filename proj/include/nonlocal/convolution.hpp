#pragma once

#include <cstddef>

#include "nonlocal/kernels.hpp"
#include "nonlocal/offset_array.hpp"

namespace nonlocal {

/// Discrete convolution data of one reconstruction, aligned to cells.
/// a_minus[j] approximates A at x_{j+1/2} seen from cell j, a_plus[j] at
/// x_{j-1/2} seen from cell j.
struct ConvolutionFields {
  OffsetArray a_center;
  OffsetArray s;
  OffsetArray a_minus;
  OffsetArray a_plus;
};

/// Cell-centre midpoint sums A_j = dx * sum_l mu_{j-l} rho_l for j in [lo, hi].
/// The sum runs over l ascending and touches only the kernel's nonzero window.
/// Throws std::invalid_argument if rho_ext does not cover the stencil.
void cell_center_convolution_into(OffsetArray& out, const OffsetArray& rho_ext, const DiscreteKernel& kernel,
                                  std::ptrdiff_t lo, std::ptrdiff_t hi);
OffsetArray cell_center_convolution(const OffsetArray& rho_ext, const DiscreteKernel& kernel, std::ptrdiff_t lo,
                                    std::ptrdiff_t hi);

/// s_j = theta (A_{j+1} - A_{j-1}) for j in [lo, hi].
void convolution_slopes_into(OffsetArray& out, const OffsetArray& a_center, double theta, std::ptrdiff_t lo,
                             std::ptrdiff_t hi);
OffsetArray convolution_slopes(const OffsetArray& a_center, double theta, std::ptrdiff_t lo, std::ptrdiff_t hi);
OffsetArray convolution_slopes(const OffsetArray& a_center, double theta);

/// a_minus = A + s/2, a_plus = A - s/2 on the common range of the inputs.
void interface_convolutions_into(OffsetArray& a_minus, OffsetArray& a_plus, const OffsetArray& a_center,
                                 const OffsetArray& s);

/// Trapezoidal interface sums at x_{j+1/2}, j in [lo, hi]:
///   (dx/2) sum_l [mu_{j+1-l} plus_l + mu_{j-l} minus_l]
/// where plus_l is the value at x_{l-1/2} and minus_l the value at x_{l+1/2},
/// both owned by cell l.
void midtime_convolution_into(OffsetArray& out, const OffsetArray& face_plus, const OffsetArray& face_minus,
                              const DiscreteKernel& kernel, std::ptrdiff_t lo, std::ptrdiff_t hi);
OffsetArray midtime_convolution(const OffsetArray& face_plus, const OffsetArray& face_minus,
                                const DiscreteKernel& kernel, std::ptrdiff_t lo, std::ptrdiff_t hi);

/// First-order interface sums (dx/2) sum_l (mu_{j+1-l} + mu_{j-l}) rho_l,
/// evaluated term by term exactly as midtime_convolution with both faces
/// equal to the cell values.
void fo_interface_convolution_into(OffsetArray& out, const OffsetArray& rho_ext, const DiscreteKernel& kernel,
                                   std::ptrdiff_t lo, std::ptrdiff_t hi);
OffsetArray fo_interface_convolution(const OffsetArray& rho_ext, const DiscreteKernel& kernel, std::ptrdiff_t lo,
                                     std::ptrdiff_t hi);

/// Kernel window [first, last] used by the sums; {0, 0} for an all-zero kernel.
struct KernelWindow {
  std::ptrdiff_t first = 0;
  std::ptrdiff_t last = 0;
};
KernelWindow kernel_window(const DiscreteKernel& kernel) noexcept;

}  // namespace nonlocal
