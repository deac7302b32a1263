#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qwsed/error.hpp"

namespace qwsed {

/// Closed-form U(t)_{u,u} of the unweighted path P_n in the sine
/// eigenbasis; u is 1-based to match the usual path labeling.
inline std::complex<double> path_diagonal_oracle(int n, int u, double t) {
  if (u < 1 || u > n)
    fail(errc::index_out_of_range, "path vertex " + std::to_string(u) + " not in 1.." + std::to_string(n));
  const double pi = std::numbers::pi;
  std::complex<double> sum(0.0, 0.0);
  for (int j = 1; j <= n; ++j) {
    double theta = j * pi / (n + 1);
    double s = std::sin(u * theta);
    sum += std::polar(s * s, 2.0 * t * std::cos(theta));
  }
  return 2.0 / (n + 1) * sum;
}

/// Closed-form U(t)_{u,u} of the unweighted cycle C_n (vertex-transitive,
/// so no vertex argument).
inline std::complex<double> cycle_diagonal_oracle(int n, double t) {
  if (n < 3) fail(errc::bad_params, "cycle needs at least 3 vertices");
  const double pi = std::numbers::pi;
  std::complex<double> sum(0.0, 0.0);
  for (int j = 0; j < n; ++j) sum += std::polar(1.0, 2.0 * t * std::cos(2.0 * pi * j / n));
  return sum / static_cast<double>(n);
}

}  // namespace qwsed
