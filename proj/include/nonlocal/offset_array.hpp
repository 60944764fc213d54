#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace nonlocal {

/// Contiguous array addressed by a signed logical index range [first, last].
///
/// Cells of a grid with M cells are indexed 0..M-1; ghost cells extend the
/// range below 0 and above M-1. Interface quantities use the same storage
/// rule: the value at position j belongs to the interface j+1/2, i.e. the
/// right face of cell j, so the left domain boundary is position -1.
class OffsetArray {
public:
  OffsetArray() = default;
  OffsetArray(std::ptrdiff_t first, std::ptrdiff_t last, double fill = 0.0)
      : first_(first), values_(last >= first ? static_cast<std::size_t>(last - first + 1) : 0, fill) {}
  OffsetArray(std::ptrdiff_t first, std::vector<double> values)
      : first_(first), values_(std::move(values)) {}

  std::ptrdiff_t first() const noexcept { return first_; }
  std::ptrdiff_t last() const noexcept { return first_ + static_cast<std::ptrdiff_t>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  bool covers(std::ptrdiff_t lo, std::ptrdiff_t hi) const noexcept {
    return lo >= first_ && hi <= last();
  }

  double operator[](std::ptrdiff_t i) const noexcept { return values_[static_cast<std::size_t>(i - first_)]; }
  double& operator[](std::ptrdiff_t i) noexcept { return values_[static_cast<std::size_t>(i - first_)]; }

  double at(std::ptrdiff_t i) const {
    if (i < first_ || i > last()) throw std::out_of_range("OffsetArray index out of range");
    return (*this)[i];
  }

  /// Re-shape in place, keeping the allocation when possible.
  void reset(std::ptrdiff_t first, std::ptrdiff_t last, double fill = 0.0) {
    first_ = first;
    values_.assign(last >= first ? static_cast<std::size_t>(last - first + 1) : 0, fill);
  }

  /// Values on [lo, hi] as a span.
  std::span<const double> slice(std::ptrdiff_t lo, std::ptrdiff_t hi) const {
    if (!covers(lo, hi)) throw std::out_of_range("OffsetArray slice out of range");
    return {values_.data() + (lo - first_), static_cast<std::size_t>(hi - lo + 1)};
  }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

private:
  std::ptrdiff_t first_ = 0;
  std::vector<double> values_;
};

}  // namespace nonlocal
