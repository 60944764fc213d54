#pragma once

// Independent reference implementations used by the tests. Everything here
// works on plain vectors with explicit modular (periodic) or clamped
// (absorbing) indexing and never touches the library's halo logic.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline std::ptrdiff_t wrap(std::ptrdiff_t i, std::ptrdiff_t m) { return ((i % m) + m) % m; }

/// Value of cell i under periodic or absorbing extension.
inline double ext(const Vec& v, std::ptrdiff_t i, bool periodic) {
  const auto m = static_cast<std::ptrdiff_t>(v.size());
  if (periodic) return v[static_cast<std::size_t>(wrap(i, m))];
  if (i < 0) return v.front();
  if (i >= m) return v.back();
  return v[static_cast<std::size_t>(i)];
}

inline double minmod3(double a, double b, double c) {
  if (a > 0 && b > 0 && c > 0) return std::fmin(a, std::fmin(b, c));
  if (a < 0 && b < 0 && c < 0) return std::fmax(a, std::fmax(b, c));
  return 0.0;
}

/// Double loop over a wide index window; mu(k) is zero outside its support.
/// Terms are added in ascending l, so the result is reproducible bit for bit.
inline double brute_center(const std::function<double(std::ptrdiff_t)>& mu, const std::function<double(std::ptrdiff_t)>& rho,
                           std::ptrdiff_t j, std::ptrdiff_t reach, double dx) {
  double s = 0.0;
  for (std::ptrdiff_t l = j - reach; l <= j + reach; ++l) {
    const double w = mu(j - l);
    if (w != 0.0) s += w * rho(l);
  }
  return dx * s;
}

inline double brute_interface(const std::function<double(std::ptrdiff_t)>& mu,
                              const std::function<double(std::ptrdiff_t)>& plus,
                              const std::function<double(std::ptrdiff_t)>& minus, std::ptrdiff_t j,
                              std::ptrdiff_t reach, double dx) {
  double s = 0.0;
  for (std::ptrdiff_t l = j - reach; l <= j + reach; ++l) {
    const double wp = mu(j + 1 - l);
    const double wm = mu(j - l);
    if (wp != 0.0 || wm != 0.0) s += wp * plus(l) + wm * minus(l);
  }
  return 0.5 * dx * s;
}

/// One MUSCL-Hancock step written out cell by cell from the defining
/// formulas, periodic or absorbing boundaries.
inline Vec mh_step(const Vec& rho, const std::function<double(std::ptrdiff_t)>& mu, std::ptrdiff_t reach, double dx,
                   double dt, double theta, double alpha, const std::function<double(double, double)>& f,
                   bool periodic) {
  const auto m = static_cast<std::ptrdiff_t>(rho.size());
  const double lam = dt / dx;
  auto r = [&](std::ptrdiff_t i) { return ext(rho, i, periodic); };
  auto sigma = [&](std::ptrdiff_t i) {
    return 2.0 * theta * minmod3(r(i) - r(i - 1), 0.5 * (r(i + 1) - r(i - 1)), r(i + 1) - r(i));
  };
  auto A = [&](std::ptrdiff_t i) {
    double s = 0.0;
    for (std::ptrdiff_t l = i - reach; l <= i + reach; ++l) s += mu(i - l) * r(l);
    return dx * s;
  };
  auto half = [&](std::ptrdiff_t i, bool right_face) {
    const double rm = r(i) + 0.5 * sigma(i);
    const double rp = r(i) - 0.5 * sigma(i);
    const double s = theta * (A(i + 1) - A(i - 1));
    const double am = A(i) + 0.5 * s;
    const double ap = A(i) - 0.5 * s;
    const double d = f(rm, am) - f(rp, ap);
    return (right_face ? rm : rp) - 0.5 * lam * d;
  };
  auto a_half = [&](std::ptrdiff_t j) {
    double s = 0.0;
    for (std::ptrdiff_t l = j - reach; l <= j + reach + 1; ++l) {
      s += mu(j + 1 - l) * half(l, false) + mu(j - l) * half(l, true);
    }
    return 0.5 * dx * s;
  };
  auto F = [&](std::ptrdiff_t j) {
    const double u = half(j, true);
    const double v = half(j + 1, false);
    const double a = a_half(j);
    return 0.5 * (f(u, a) + f(v, a)) - alpha * (v - u) / (2.0 * lam);
  };
  Vec out(rho.size());
  for (std::ptrdiff_t j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = r(j) - lam * (F(j) - F(j - 1));
  return out;
}

/// First-order Lax-Friedrichs step with the interface sum taken from cell values.
inline Vec fo_step(const Vec& rho, const std::function<double(std::ptrdiff_t)>& mu, std::ptrdiff_t reach, double dx,
                   double dt, double alpha, const std::function<double(double, double)>& f, bool periodic) {
  const auto m = static_cast<std::ptrdiff_t>(rho.size());
  const double lam = dt / dx;
  auto r = [&](std::ptrdiff_t i) { return ext(rho, i, periodic); };
  auto F = [&](std::ptrdiff_t j) {
    double s = 0.0;
    for (std::ptrdiff_t l = j - reach; l <= j + reach + 1; ++l) s += (mu(j + 1 - l) + mu(j - l)) * r(l);
    const double a = 0.5 * dx * s;
    return 0.5 * (f(r(j), a) + f(r(j + 1), a)) - alpha * (r(j + 1) - r(j)) / (2.0 * lam);
  };
  Vec out(rho.size());
  for (std::ptrdiff_t j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = r(j) - lam * (F(j) - F(j - 1));
  return out;
}

inline Vec random_state(std::mt19937_64& gen, std::size_t m, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec v(m);
  for (auto& x : v) x = u(gen);
  return v;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::fmax(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace oracle
