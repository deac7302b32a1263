#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qwsed/periodicity.hpp"
#include "qwsed/spectral.hpp"

namespace qwsed {

/// Sampled |U(t)_{u,u}| trace with a refined global minimum over (0, horizon].
struct ScanResult {
  std::vector<double> times;       // grid, starts at 0
  std::vector<double> magnitudes;  // |U(t)_{u,u}| per sample
  double global_min = 1.0;
  double argmin = 0.0;
  double horizon = 0.0;
  double step = 0.0;
  bool period_exact = false;  // horizon was one full period
};

struct ScanOptions {
  double horizon = 200.0;
  double step = 0.0;          // 0 = auto: min(0.01, pi / (8 * |lambda|_max))
  bool use_period = true;     // replace the horizon by rho when periodic
  int refine_candidates = 10;
  double refine_resolution = 1e-10;
};

namespace detail {

template <typename F>
double golden_minimize(F&& f, double a, double b, double resolution) {
  const double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > resolution) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace detail

/// Dense grid over (0, horizon] plus golden-section refinement around the
/// lowest sampled local minima. For a periodic vertex the horizon becomes
/// one period, making the minimum global by periodicity.
inline ScanResult numeric_scan(const SpectralDecomposition& s, int u, ScanOptions opts = {}) {
  VertexProfile profile = support(s, u);
  ScanResult r;
  r.horizon = opts.horizon;
  if (opts.use_period) {
    PeriodicityReport per = periodicity(s, profile);
    if (per.periodic && per.period) {
      r.horizon = *per.period;
      r.period_exact = true;
    }
  }
  double lmax = 0.0;
  for (int idx : profile.support) lmax = std::max(lmax, std::abs(s.eigenvalues[idx]));
  double step = opts.step > 0.0 ? opts.step : std::min(0.01, std::numbers::pi / (8.0 * std::max(lmax, 1e-9)));
  long long samples = std::max<long long>(8, static_cast<long long>(std::ceil(r.horizon / step)));
  double h = r.horizon / static_cast<double>(samples);
  r.step = h;

  auto mag = [&](double t) { return std::abs(walk_diagonal(profile, s, t)); };

  r.times.resize(samples + 1);
  r.magnitudes.resize(samples + 1);
  for (long long k = 0; k <= samples; ++k) {
    double t = static_cast<double>(k) * h;
    r.times[k] = t;
    r.magnitudes[k] = mag(t);
  }

  r.global_min = r.magnitudes[1];
  r.argmin = r.times[1];
  for (long long k = 1; k <= samples; ++k) {
    if (r.magnitudes[k] < r.global_min) {
      r.global_min = r.magnitudes[k];
      r.argmin = r.times[k];
    }
  }

  // refine the lowest interior local minima
  std::vector<long long> candidates;
  for (long long k = 1; k <= samples; ++k) {
    double prev = r.magnitudes[k - 1];
    double next = k == samples ? r.magnitudes[k] + 1.0 : r.magnitudes[k + 1];
    if (r.magnitudes[k] <= prev && r.magnitudes[k] <= next) candidates.push_back(k);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](long long a, long long b) { return r.magnitudes[a] < r.magnitudes[b]; });
  if (static_cast<int>(candidates.size()) > opts.refine_candidates)
    candidates.resize(opts.refine_candidates);
  for (long long k : candidates) {
    double a = r.times[k - 1];
    double b = k == samples ? r.times[k] : r.times[k + 1];
    double t = detail::golden_minimize(mag, a, b, opts.refine_resolution);
    double m = mag(t);
    if (m < r.global_min || (m == r.global_min && t < r.argmin)) {
      r.global_min = m;
      r.argmin = t;
    }
  }
  return r;
}

}  // namespace qwsed
