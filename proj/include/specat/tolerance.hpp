#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace specat {

// Two-sided closeness policy for floating scalars:
//   |x - y| <= abs + rel * max(|x|, |y|)
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  static constexpr Tolerance exact() { return {0.0, 0.0}; }
  static constexpr Tolerance uniform(double t) { return {t, t}; }

  bool close(double x, double y) const {
    if (x == y) return true;
    return std::abs(x - y) <= abs + rel * std::max(std::abs(x), std::abs(y));
  }

  bool close(std::complex<double> x, std::complex<double> y) const {
    if (x == y) return true;
    return std::abs(x - y) <= abs + rel * std::max(std::abs(x), std::abs(y));
  }
};

}  // namespace specat
