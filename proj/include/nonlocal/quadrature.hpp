#pragma once

#include <array>
#include <cmath>

namespace nonlocal::quadrature {

/// 5-point Gauss-Legendre nodes/weights on [-1, 1]; exact for degree <= 9.
inline constexpr std::array<double, 5> gl5_nodes = {
    -0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
    0.5384693101056830910363144, 0.9061798459386639927976269};
inline constexpr std::array<double, 5> gl5_weights = {
    0.2369268850561890875142640, 0.4786286704993664680412915, 0.5688888888888888888888889,
    0.4786286704993664680412915, 0.2369268850561890875142640};

template <class F>
double gauss_legendre_5(F&& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl5_nodes.size(); ++i) sum += gl5_weights[i] * f(mid + half * gl5_nodes[i]);
  return half * sum;
}

template <class F>
double composite_gauss_legendre_5(F&& f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) sum += gauss_legendre_5(f, lo + p * h, lo + (p + 1) * h);
  return sum;
}

}  // namespace nonlocal::quadrature
