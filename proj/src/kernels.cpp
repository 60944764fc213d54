#include "nonlocal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nonlocal/quadrature.hpp"

namespace nonlocal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate(const KernelShape& shape) {
  std::visit(overloaded{
                 [](const Poly52Shape& s) {
                   if (!std::isfinite(s.a) || !std::isfinite(s.b) || !(s.b > s.a)) {
                     throw std::invalid_argument("poly52 kernel needs a finite support with a < b");
                   }
                 },
                 [](const CubicShape& s) {
                   if (!(s.eta > 0.0) || !std::isfinite(s.eta)) {
                     throw std::invalid_argument("cubic kernel needs eta > 0");
                   }
                 },
                 [](const TabulatedShape& s) {
                   if (!std::isfinite(s.a) || !std::isfinite(s.b) || !(s.b > s.a)) {
                     throw std::invalid_argument("tabulated kernel needs a finite support with a < b");
                   }
                   if (!s.evaluator) throw std::invalid_argument("tabulated kernel has no evaluator");
                 },
             },
             shape);
}

double unnormalized(const KernelShape& shape, double x) {
  return std::visit(overloaded{
                        [x](const Poly52Shape& s) {
                          if (x < s.a || x > s.b) return 0.0;
                          const double g = (x - s.a) * (s.b - x);
                          return g * g * std::sqrt(g);
                        },
                        [x](const CubicShape& s) {
                          if (x < -s.eta || x > 0.0) return 0.0;
                          const double g = -x * (s.eta + x);
                          return g * g * g;
                        },
                        [x](const TabulatedShape& s) {
                          if (x < s.a || x > s.b) return 0.0;
                          return s.evaluator(x);
                        },
                    },
                    shape);
}

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x < xs.front() || x > xs.back()) return 0.0;
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  const auto i = static_cast<std::size_t>(it - xs.begin());
  if (i == 0) return ys.front();
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

}  // namespace

double normalization_constant(const KernelShape& shape) {
  validate(shape);
  return std::visit(overloaded{
                        [](const Poly52Shape& s) {
                          // (b-a)^6 B(7/2, 7/2)
                          return std::pow(s.b - s.a, 6) * 5.0 * std::numbers::pi / 1024.0;
                        },
                        [](const CubicShape& s) {
                          // eta^7 B(4, 4)
                          return std::pow(s.eta, 7) / 140.0;
                        },
                        [](const TabulatedShape& s) {
                          if (!s.nodes_x.empty()) {
                            double sum = 0.0;
                            for (std::size_t i = 1; i < s.nodes_x.size(); ++i) {
                              sum += 0.5 * (s.nodes_x[i] - s.nodes_x[i - 1]) * (s.nodes_y[i] + s.nodes_y[i - 1]);
                            }
                            return sum;
                          }
                          return quadrature::composite_gauss_legendre_5(s.evaluator, s.a, s.b, 2048);
                        },
                    },
                    shape);
}

std::pair<double, double> support_extent(const KernelShape& shape) {
  return std::visit(overloaded{
                        [](const Poly52Shape& s) { return std::pair{s.a, s.b}; },
                        [](const CubicShape& s) { return std::pair{-s.eta, 0.0}; },
                        [](const TabulatedShape& s) { return std::pair{s.a, s.b}; },
                    },
                    shape);
}

KernelSpec::KernelSpec(KernelShape shape) : shape_(std::move(shape)) {
  validate(shape_);
  norm_ = normalization_constant(shape_);
  if (!(norm_ > 0.0) || !std::isfinite(norm_)) {
    throw std::invalid_argument("kernel integral must be positive and finite");
  }
  std::tie(a_, b_) = support_extent(shape_);
  if (const auto* t = std::get_if<TabulatedShape>(&shape_)) {
    smooth_ = t->evaluator(t->a) == 0.0 && t->evaluator(t->b) == 0.0;
  }
}

KernelSpec KernelSpec::tabulated(std::vector<double> x, std::vector<double> mu) {
  if (x.size() != mu.size() || x.size() < 2) {
    throw std::invalid_argument("tabulated kernel needs at least two (x, mu) pairs");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(mu[i])) throw std::invalid_argument("tabulated kernel has non-finite entries");
    if (mu[i] < 0.0) throw std::invalid_argument("tabulated kernel must be nonnegative");
    if (i > 0 && !(x[i] > x[i - 1])) throw std::invalid_argument("tabulated kernel abscissae must increase strictly");
  }
  TabulatedShape s;
  s.a = x.front();
  s.b = x.back();
  s.nodes_x = std::move(x);
  s.nodes_y = std::move(mu);
  s.evaluator = [xs = s.nodes_x, ys = s.nodes_y](double v) { return interpolate(xs, ys, v); };
  return KernelSpec(std::move(s));
}

KernelSpec KernelSpec::tabulated(double a, double b, std::function<double(double)> evaluator) {
  TabulatedShape s;
  s.a = a;
  s.b = b;
  s.evaluator = std::move(evaluator);
  return KernelSpec(std::move(s));
}

double KernelSpec::operator()(double x) const { return unnormalized(shape_, x) / norm_; }

double KernelSpec::derivative(double x) const {
  return std::visit(overloaded{
                        [&](const Poly52Shape& s) {
                          if (x <= s.a || x >= s.b) return 0.0;
                          const double g = (x - s.a) * (s.b - x);
                          return 2.5 * g * std::sqrt(g) * (s.a + s.b - 2.0 * x) / norm_;
                        },
                        [&](const CubicShape& s) {
                          if (x <= -s.eta || x >= 0.0) return 0.0;
                          const double g = -x * (s.eta + x);
                          return 3.0 * g * g * (-s.eta - 2.0 * x) / norm_;
                        },
                        [&](const TabulatedShape& s) {
                          if (x <= s.a || x >= s.b) return 0.0;
                          if (!s.nodes_x.empty()) {
                            auto it = std::upper_bound(s.nodes_x.begin(), s.nodes_x.end(), x);
                            const auto i = std::clamp<std::size_t>(static_cast<std::size_t>(it - s.nodes_x.begin()), 1,
                                                                   s.nodes_x.size() - 1);
                            return (s.nodes_y[i] - s.nodes_y[i - 1]) / (s.nodes_x[i] - s.nodes_x[i - 1]) / norm_;
                          }
                          const double h = 1e-6 * (s.b - s.a);
                          return (s.evaluator(std::min(x + h, s.b)) - s.evaluator(std::max(x - h, s.a))) /
                                 (std::min(x + h, s.b) - std::max(x - h, s.a)) / norm_;
                        },
                    },
                    shape_);
}

double KernelSpec::derivative_sup_norm() const {
  return std::visit(overloaded{
                        [&](const Poly52Shape& s) {
                          // max of g^{3/2}|g'| sits at distance w/2 from the centre
                          const double w = 0.5 * (s.b - s.a);
                          return 2.5 * (3.0 * std::sqrt(3.0) / 8.0) * std::pow(w, 4) / norm_;
                        },
                        [&](const CubicShape& s) {
                          // max of g^2|g'| sits at distance w/sqrt(5) from the centre
                          const double w = 0.5 * s.eta;
                          return 3.0 * 32.0 * std::pow(w, 5) / (25.0 * std::sqrt(5.0)) / norm_;
                        },
                        [&](const TabulatedShape& s) {
                          double best = 0.0;
                          if (!s.nodes_x.empty()) {
                            for (std::size_t i = 1; i < s.nodes_x.size(); ++i) {
                              best = std::max(best, std::abs((s.nodes_y[i] - s.nodes_y[i - 1]) /
                                                             (s.nodes_x[i] - s.nodes_x[i - 1])));
                            }
                            return best / norm_;
                          }
                          constexpr int n = 20000;
                          for (int i = 0; i <= n; ++i) {
                            best = std::max(best, std::abs(derivative(s.a + (s.b - s.a) * i / n)));
                          }
                          return best;
                        },
                    },
                    shape_);
}

double KernelSpec::sup_norm() const {
  return std::visit(overloaded{
                        [&](const Poly52Shape& s) { return std::pow(0.5 * (s.b - s.a), 5) / norm_; },
                        [&](const CubicShape& s) { return std::pow(0.5 * s.eta, 6) / norm_; },
                        [&](const TabulatedShape& s) {
                          double best = 0.0;
                          if (!s.nodes_y.empty()) {
                            for (double y : s.nodes_y) best = std::max(best, y);
                            return best / norm_;
                          }
                          constexpr int n = 20000;
                          for (int i = 0; i <= n; ++i) best = std::max(best, (*this)(s.a + (s.b - s.a) * i / n));
                          return best;
                        },
                    },
                    shape_);
}

std::string KernelSpec::name() const {
  return std::visit(overloaded{
                        [](const Poly52Shape&) { return std::string("poly52"); },
                        [](const CubicShape&) { return std::string("cubic"); },
                        [](const TabulatedShape&) { return std::string("tabulated"); },
                    },
                    shape_);
}

DiscreteKernel sample_kernel(const KernelSpec& spec, double dx) {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw std::invalid_argument("kernel sampling needs dx > 0");
  const double a = spec.a();
  const double b = spec.b();
  // covers every k with k*dx in [a - dx, b + dx] and keeps at least one zero
  // sample beyond each end of the support
  const auto k_first = static_cast<std::ptrdiff_t>(std::floor(a / dx)) - 1;
  const auto k_last = static_cast<std::ptrdiff_t>(std::ceil(b / dx)) + 1;

  DiscreteKernel dk;
  dk.dx = dx;
  dk.samples.reset(k_first, k_last);
  dk.nz_first = k_last + 1;
  dk.nz_last = k_first;
  for (std::ptrdiff_t k = k_first; k <= k_last; ++k) {
    const double v = spec(static_cast<double>(k) * dx);
    dk.samples[k] = v;
    if (v != 0.0) {
      dk.nz_first = std::min(dk.nz_first, k);
      dk.nz_last = std::max(dk.nz_last, k);
    }
  }
  if (dk.nz_first > dk.nz_last) {
    dk.nz_first = 0;
    dk.nz_last = -1;
  }
  dk.ghost_count = static_cast<std::ptrdiff_t>(std::ceil((b - a) / dx - 1e-9));
  if (dx >= b - a) {
    dk.warning = "dx >= kernel support length; the kernel is under-resolved";
  }
  return dk;
}

KernelSpec load_tabulated_kernel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open kernel table " + path.string());
  std::vector<double> xs;
  std::vector<double> ys;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double x = 0.0;
    double y = 0.0;
    if (!(row >> x)) continue;
    if (!(row >> y)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected two columns");
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  return KernelSpec::tabulated(std::move(xs), std::move(ys));
}

}  // namespace nonlocal
