#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qwsed/error.hpp"

namespace qwsed {

/// Exact 2-adic valuation of a nonzero integer.
inline int two_adic(long long k) {
  if (k == 0) fail(errc::zero_input, "two_adic(0) is undefined");
  unsigned long long a = static_cast<unsigned long long>(k < 0 ? -k : k);
  int v = 0;
  while ((a & 1ull) == 0) {
    a >>= 1;
    ++v;
  }
  return v;
}

inline bool is_square_free(long long d) {
  if (d < 1) return false;
  for (long long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

struct EigenvalueClass {
  enum class form { integer, ratio_sqrt, unrecognized };
  form kind = form::unrecognized;
  long long p = 0;      // integer value, or numerator of the sqrt coefficient
  long long q = 1;      // positive denominator, gcd(p,q) = 1
  long long delta = 1;  // square-free, > 1 for ratio_sqrt
  double value = 0.0;

  bool is_integer() const { return kind == form::integer; }
  bool is_ratio_sqrt() const { return kind == form::ratio_sqrt; }
  bool recognized() const { return kind != form::unrecognized; }

  std::string str() const {
    switch (kind) {
      case form::integer: return std::to_string(p);
      case form::ratio_sqrt:
        return "(" + std::to_string(p) + "/" + std::to_string(q) + ")sqrt(" +
               std::to_string(delta) + ")";
      case form::unrecognized: return "unrecognized(" + std::to_string(value) + ")";
    }
    return "";
  }
};

/// Snaps a real to the nearest integer, else to (p/q)*sqrt(delta) with
/// p,q <= 64 coprime and square-free delta <= 10^4. Deterministic: the
/// integer form wins, then the smallest q then smallest p that matches.
inline EigenvalueClass recognize(double value, double tol = 1e-7) {
  EigenvalueClass out;
  out.value = value;
  double r = std::round(value);
  if (std::abs(value - r) <= tol) {
    out.kind = EigenvalueClass::form::integer;
    out.p = static_cast<long long>(r);
    out.q = 1;
    out.delta = 1;
    return out;
  }
  double av = std::abs(value);
  for (long long q = 1; q <= 64; ++q) {
    for (long long p = 1; p <= 64; ++p) {
      if (std::gcd(p, q) != 1) continue;
      double x = (static_cast<double>(q) * av / static_cast<double>(p));
      long long d = std::llround(x * x);
      if (d < 2 || d > 10000 || !is_square_free(d)) continue;
      double reconstructed =
          static_cast<double>(p) / static_cast<double>(q) * std::sqrt(static_cast<double>(d));
      if (std::abs(reconstructed - av) <= tol) {
        out.kind = EigenvalueClass::form::ratio_sqrt;
        out.p = value < 0 ? -p : p;
        out.q = q;
        out.delta = d;
        return out;
      }
    }
  }
  return out;
}

/// Rational a/b with b <= den_max approximating x within tol, reduced.
inline std::optional<std::pair<long long, long long>> recognize_rational(double x, long long den_max,
                                                                         double tol) {
  for (long long b = 1; b <= den_max; ++b) {
    long long a = std::llround(x * static_cast<double>(b));
    if (std::abs(x - static_cast<double>(a) / static_cast<double>(b)) <= tol) {
      long long g = std::gcd(std::abs(a), b);
      if (g == 0) g = 1;
      return std::make_pair(a / g, b / g);
    }
  }
  return std::nullopt;
}

namespace detail {

// Tuples are visited in layers of increasing max-norm; inside a layer in
// descending lexicographic order, so (2,-1) precedes (-2,1) and small
// relations are reported before their multiples.
template <typename Visit>
bool visit_relations(const std::vector<double>& values, int bound, double abs_tol, Visit&& visit) {
  const int k = static_cast<int>(values.size());
  std::vector<long long> ell(k, 0);
  std::vector<double> tail_max(k + 1, 0.0);  // filled per radius
  for (int radius = 1; radius <= bound; ++radius) {
    for (int i = k; i-- > 0;)
      tail_max[i] = tail_max[i + 1] + static_cast<double>(radius) * std::abs(values[i]);
    // depth-first odometer, coordinates run radius..-radius
    auto rec = [&](auto&& self, int pos, double acc, bool hit_radius) -> bool {
      if (pos == k) {
        if (!hit_radius) return false;  // covered by a smaller layer
        if (std::abs(acc) <= abs_tol) return visit(ell);
        return false;
      }
      if (std::abs(acc) > abs_tol + tail_max[pos]) return false;  // unreachable
      for (long long c = radius; c >= -radius; --c) {
        ell[pos] = c;
        if (self(self, pos + 1, acc + static_cast<double>(c) * values[pos],
                 hit_radius || c == radius || c == -radius))
          return true;
      }
      return false;
    };
    if (rec(rec, 0, 0.0, false)) return true;
  }
  return false;
}

}  // namespace detail

/// First nonzero integer tuple with |l_i| <= coeff_bound satisfying
/// |sum l_i v_i| <= tol * sum |v_i|, or absent. At most six values.
inline std::optional<std::vector<long long>> integer_relation(const std::vector<double>& values,
                                                              int coeff_bound, double tol) {
  if (values.empty() || values.size() > 6)
    fail(errc::too_many_values,
         "integer_relation supports 1..6 values, got " + std::to_string(values.size()));
  double scale = 0.0;
  for (double v : values) scale += std::abs(v);
  std::optional<std::vector<long long>> found;
  detail::visit_relations(values, coeff_bound, tol * scale, [&](const std::vector<long long>& ell) {
    found = ell;
    return true;
  });
  return found;
}

/// All relations up to the bound (first `max_count` in the visit order).
/// Returns absent if the cap was exceeded, so callers never reason from a
/// truncated list.
inline std::optional<std::vector<std::vector<long long>>> enumerate_relations(
    const std::vector<double>& values, int coeff_bound, double abs_tol, int max_count = 200) {
  if (values.empty() || values.size() > 6)
    fail(errc::too_many_values,
         "relation enumeration supports 1..6 values, got " + std::to_string(values.size()));
  std::vector<std::vector<long long>> out;
  bool overflow = false;
  detail::visit_relations(values, coeff_bound, abs_tol, [&](const std::vector<long long>& ell) {
    if (static_cast<int>(out.size()) >= max_count) {
      overflow = true;
      return true;
    }
    out.push_back(ell);
    return false;
  });
  if (overflow) return std::nullopt;
  return out;
}

/// Search bound capped so the exhaustive sweep stays near 2.4e7 tuples.
inline int relation_bound_for(std::size_t k, int requested) {
  int cap;
  switch (k) {
    case 1:
    case 2:
    case 3: cap = 32; break;
    case 4: cap = 22; break;
    case 5: cap = 12; break;
    default: cap = 8; break;
  }
  return std::min(requested, cap);
}

}  // namespace qwsed
