#pragma once

#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "qwsed/arithmetic.hpp"
#include "qwsed/spectral.hpp"

namespace qwsed {

enum class periodicity_reason { two_eigenvalues, ratio_condition_integer, ratio_condition_sqrt, fails };

inline const char* periodicity_reason_name(periodicity_reason r) {
  switch (r) {
    case periodicity_reason::two_eigenvalues: return "two-eigenvalues";
    case periodicity_reason::ratio_condition_integer: return "ratio-condition-integer";
    case periodicity_reason::ratio_condition_sqrt: return "ratio-condition-sqrt";
    case periodicity_reason::fails: return "fails";
  }
  return "";
}

struct PeriodicityReport {
  bool periodic = false;
  std::optional<double> period;  // rho
  periodicity_reason reason = periodicity_reason::fails;
  // period divides some smaller time with full return; rho is then only an
  // upper bound on the minimum period
  bool period_upper_bound = false;
  // recognition failed on a support value: "fails" is then unproven and
  // the exact half-case shortcut must not rely on this report
  bool unrecognized_support = false;
};

namespace detail {

inline long long llcm(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace detail

/// Ratio-condition test on the support. A two-value support is always
/// periodic; otherwise all support values must be recognized integers, or
/// rational multiples of one square root (zero allowed). The period is
/// 2*pi / g with g the gcd of the integerized pairwise differences.
inline PeriodicityReport periodicity(const SpectralDecomposition& s, const VertexProfile& p) {
  PeriodicityReport rep;
  const std::size_t k = p.support.size();
  std::vector<double> vals;
  vals.reserve(k);
  for (int idx : p.support) vals.push_back(s.eigenvalues[idx]);

  if (k <= 1) {
    rep.periodic = true;
    rep.reason = periodicity_reason::two_eigenvalues;
    double l = vals.empty() ? 0.0 : std::abs(vals[0]);
    rep.period = 2.0 * std::numbers::pi / std::max(l, 1.0);
    return rep;
  }
  if (k == 2) {
    rep.periodic = true;
    rep.reason = periodicity_reason::two_eigenvalues;
    rep.period = 2.0 * std::numbers::pi / (vals.front() - vals.back());
  } else {
    std::vector<EigenvalueClass> forms;
    forms.reserve(k);
    bool all_recognized = true;
    for (double v : vals) {
      forms.push_back(recognize(v));
      all_recognized = all_recognized && forms.back().recognized();
    }
    if (!all_recognized) {
      rep.unrecognized_support = true;
      return rep;
    }
    bool all_int = true;
    long long common_delta = 0;
    bool sqrt_ok = true;
    for (const auto& f : forms) {
      if (f.is_integer()) {
        if (f.p != 0) sqrt_ok = false;  // nonzero integer mixes with sqrt forms
      } else {
        all_int = false;
        if (common_delta == 0)
          common_delta = f.delta;
        else if (common_delta != f.delta)
          sqrt_ok = false;
      }
    }
    if (all_int) {
      long long base = forms[0].p, g = 0;
      for (const auto& f : forms) g = std::gcd(g, std::abs(f.p - base));
      rep.periodic = true;
      rep.reason = periodicity_reason::ratio_condition_integer;
      rep.period = 2.0 * std::numbers::pi / static_cast<double>(g);
    } else if (sqrt_ok && common_delta > 1) {
      // integerize the rational coefficients of sqrt(delta)
      long long lcm = 1;
      for (const auto& f : forms)
        if (f.is_ratio_sqrt()) lcm = detail::llcm(lcm, f.q);
      std::vector<long long> coeff;
      for (const auto& f : forms) coeff.push_back(f.is_ratio_sqrt() ? f.p * (lcm / f.q) : 0);
      long long g = 0;
      for (long long c : coeff) g = std::gcd(g, std::abs(c - coeff[0]));
      rep.periodic = true;
      rep.reason = periodicity_reason::ratio_condition_sqrt;
      rep.period = 2.0 * std::numbers::pi * static_cast<double>(lcm) /
                   (static_cast<double>(g) * std::sqrt(static_cast<double>(common_delta)));
    } else {
      return rep;  // recognized but incommensurate
    }
  }
  if (rep.period && std::abs(walk_diagonal(p, s, *rep.period / 2.0)) >= 1.0 - 1e-8)
    rep.period_upper_bound = true;
  return rep;
}

inline PeriodicityReport periodicity(const SpectralDecomposition& s, int u) {
  return periodicity(s, support(s, u));
}

}  // namespace qwsed
