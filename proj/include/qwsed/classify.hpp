#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "qwsed/arithmetic.hpp"
#include "qwsed/certificates.hpp"
#include "qwsed/operators.hpp"
#include "qwsed/periodicity.hpp"
#include "qwsed/scan.hpp"
#include "qwsed/spectral.hpp"
#include "qwsed/structure.hpp"

namespace qwsed {

struct ClassifyOptions {
  double support_tol = 1e-8;
  double half_tol = 1e-8;       // |diag - 1/2| window routed to the half case
  double heavy_margin = 1e-9;   // diag must exceed 1/2 by this to fire
  int relation_bound = 32;      // capped per support size, see relation_bound_for
  double relation_tol = 1e-10;  // relative residual for accepted relations
  long long zeta_denominator_max = 64;
  double zeta_rational_tol = 1e-9;
  double horizon = 200.0;
  double step = 0.0;  // 0 = auto
  bool evidence_scan = true;  // attach scanner minima to limit-type verdicts
};

// ---------------------------------------------------------------------------
// individual certificate checks
// ---------------------------------------------------------------------------

/// Fires when a single projector diagonal exceeds 1/2; the walk magnitude
/// then never drops below 2*diag - 1.
inline std::optional<Certificate> projection_heavy(const SpectralDecomposition& s,
                                                   const VertexProfile& profile,
                                                   double margin = 1e-9) {
  for (std::size_t i = 0; i < profile.support.size(); ++i) {
    if (profile.diagonals[i] > 0.5 + margin) {
      Certificate c{certificate_kind::projection_heavy,
                    {{"eigenvalue", s.eigenvalues[profile.support[i]]},
                     {"diagonal", profile.diagonals[i]}}};
      return c;
    }
  }
  return std::nullopt;
}

inline double projection_heavy_bound(const Certificate& c) {
  return 2.0 * c.data.at("diagonal").get<double>() - 1.0;
}

/// Fires for a connected bipartite graph when 0 is outside the vertex's
/// eigenvalue support; the verdict is a limit certificate with no finite
/// witness time.
inline std::optional<Certificate> bipartite_zero_free(const WeightedGraph& g,
                                                      const SpectralDecomposition& s,
                                                      const VertexProfile& profile) {
  if (!bipartition(g)) return std::nullopt;
  int zi = s.zero_index();
  if (zi >= 0 && profile.contains(zi)) return std::nullopt;
  nlohmann::json sup = nlohmann::json::array();
  for (int idx : profile.support) sup.push_back(s.eigenvalues[idx]);
  return Certificate{certificate_kind::bipartite_zero_free, {{"support", sup}}};
}

/// Graph-level certificate: bipartite with a unique perfect matching, or
/// bipartite with an even number of distinct eigenvalues. Either way every
/// vertex is not sedentary.
inline std::optional<Certificate> unique_pm(const WeightedGraph& g,
                                            const SpectralDecomposition& s) {
  if (!bipartition(g)) return std::nullopt;
  MatchingReport rep = count_perfect_matchings_capped(g);
  if (rep.count_capped == 1) {
    nlohmann::json m = nlohmann::json::array();
    for (const Edge& e : *rep.sample) m.push_back({e.u, e.v});
    return Certificate{certificate_kind::unique_perfect_matching, {{"matching", m}}};
  }
  if (s.count() % 2 == 0)
    return Certificate{certificate_kind::even_distinct_eigenvalues,
                       {{"distinct_eigenvalues", s.count()}}};
  return std::nullopt;
}

struct NotSedentaryFinding {
  Certificate certificate;
  std::optional<double> witness_time;
};

/// Zero-in-support tests for bipartite vertices with (E_0)_{u,u} < 1/2:
/// a single positive support value, integers of equal 2-adic valuation,
/// or a provably (or bounded-evidence) Q-linearly independent positive part.
inline std::optional<NotSedentaryFinding> cor18_tests(const SpectralDecomposition& s,
                                                      const VertexProfile& profile,
                                                      const ClassifyOptions& opts = {}) {
  int zi = s.zero_index();
  if (zi < 0 || !profile.contains(zi) || profile.diagonal_at(zi) >= 0.5)
    fail(errc::precondition_violated, "requires 0 in the support with diagonal below 1/2");
  double ztol = s.cluster_threshold();
  std::vector<double> pos;
  for (int idx : profile.support)
    if (s.eigenvalues[idx] > ztol) pos.push_back(s.eigenvalues[idx]);
  if (pos.empty()) return std::nullopt;

  if (pos.size() == 1) {
    double lambda = pos[0];
    NotSedentaryFinding f;
    f.certificate = Certificate{certificate_kind::single_positive,
                                {{"lambda", lambda}, {"e0", profile.diagonal_at(zi)}}};
    f.witness_time = std::numbers::pi / lambda;  // U there equals 2*(E_0)-1 < 0
    return f;
  }

  std::vector<EigenvalueClass> forms;
  bool all_recognized = true;
  for (double v : pos) {
    forms.push_back(recognize(v));
    all_recognized = all_recognized && forms.back().recognized();
  }

  if (all_recognized) {
    bool all_int = std::all_of(forms.begin(), forms.end(),
                               [](const EigenvalueClass& f) { return f.is_integer(); });
    if (all_int) {
      int nu = two_adic(forms[0].p);
      bool equal = std::all_of(forms.begin(), forms.end(),
                               [&](const EigenvalueClass& f) { return two_adic(f.p) == nu; });
      if (equal) {
        NotSedentaryFinding f;
        f.certificate = Certificate{certificate_kind::equal_two_adic,
                                    {{"values", pos}, {"nu2", nu}}};
        return f;
      }
    }
    // one value per square-free class (delta = 1 for integers) means the
    // set is exactly independent over Q
    std::vector<long long> deltas;
    for (const auto& f : forms) deltas.push_back(f.is_integer() ? 1 : f.delta);
    std::sort(deltas.begin(), deltas.end());
    if (std::adjacent_find(deltas.begin(), deltas.end()) == deltas.end()) {
      NotSedentaryFinding f;
      f.certificate = Certificate{certificate_kind::linear_independent,
                                  {{"values", pos}, {"evidence", "exact-forms"}}};
      return f;
    }
    return std::nullopt;  // repeated class: provably dependent
  }

  // bounded evidence: pairwise irrational ratios and no relation up to bound
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (recognize_rational(pos[i] / pos[j], 64, 1e-7)) return std::nullopt;
  if (pos.size() > 6) return std::nullopt;
  int bound = relation_bound_for(pos.size(), opts.relation_bound);
  if (integer_relation(pos, bound, opts.relation_tol)) return std::nullopt;
  NotSedentaryFinding f;
  f.certificate = Certificate{certificate_kind::linear_independent,
                              {{"values", pos}, {"evidence", "bounded"}, {"bound", bound}}};
  return f;
}

// ---------------------------------------------------------------------------
// half case: some projector diagonal equals 1/2
// ---------------------------------------------------------------------------

struct HalfCaseResult {
  std::optional<verdict_status> status;  // absent: bounded search exhausted
  Certificate certificate;               // audit either way
};

namespace detail {

struct Rational {
  long long num = 0;
  long long den = 1;
};

// groups the differences lambda - theta by square-free radical class when
// every support value has a recognized exact form and the classes do not
// couple (theta zero, or everything in one class)
inline std::optional<std::map<long long, std::vector<Rational>>> exact_difference_groups(
    const std::vector<EigenvalueClass>& others, const EigenvalueClass& theta) {
  std::map<long long, std::vector<Rational>> groups;
  auto cls = [](const EigenvalueClass& f) { return f.is_integer() ? 1ll : f.delta; };
  bool theta_zero = theta.is_integer() && theta.p == 0;
  for (const auto& f : others) {
    if (!f.recognized() || !theta.recognized()) return std::nullopt;
    if (cls(f) == cls(theta)) {
      // same class: difference stays in the class
      long long num = f.p * theta.q - theta.p * f.q;
      long long den = f.q * theta.q;
      groups[cls(f)].push_back({num, den});
    } else if (theta_zero) {
      groups[cls(f)].push_back({f.p, f.q});
    } else {
      return std::nullopt;  // classes couple through theta
    }
  }
  return groups;
}

// equal 2-adic valuation of the integerized values within every class of
// size >= 2 is exactly the all-relations-even condition
inline std::optional<bool> all_relations_even(
    const std::map<long long, std::vector<Rational>>& groups) {
  for (const auto& [delta, members] : groups) {
    if (members.size() < 2) continue;
    long long lcm = 1;
    for (const auto& r : members) lcm = llcm(lcm, r.den);
    std::vector<long long> ints;
    for (const auto& r : members) ints.push_back(r.num * (lcm / r.den));
    int nu = two_adic(ints[0]);
    for (long long v : ints)
      if (two_adic(v) != nu) return false;  // an odd-sum relation exists
  }
  return true;
}

template <typename Pred>
std::optional<std::vector<long long>> find_relation_if(const std::vector<double>& values, int bound,
                                                       double abs_tol, Pred&& pred) {
  std::optional<std::vector<long long>> found;
  visit_relations(values, bound, abs_tol, [&](const std::vector<long long>& ell) {
    if (!pred(ell)) return false;
    found = ell;
    return true;
  });
  return found;
}

}  // namespace detail

/// Decides the case (E_theta)_{u,u} = 1/2. With fully recognized support
/// the parity of relation sums is settled exactly by 2-adic valuations;
/// otherwise a bounded relation search can only certify the sedentary side.
inline HalfCaseResult half_case_parity(const SpectralDecomposition& s,
                                       const VertexProfile& profile, int theta_index,
                                       const ClassifyOptions& opts = {}) {
  double d = profile.diagonal_at(theta_index);
  if (std::abs(d - 0.5) > opts.half_tol)
    fail(errc::not_half_case, "projector diagonal is not 1/2 at the given eigenvalue");
  double theta = s.eigenvalues[theta_index];

  std::vector<double> diffs;
  std::vector<EigenvalueClass> other_forms;
  for (int idx : profile.support) {
    if (idx == theta_index) continue;
    diffs.push_back(s.eigenvalues[idx] - theta);
    other_forms.push_back(recognize(s.eigenvalues[idx]));
  }
  EigenvalueClass theta_form = recognize(theta);

  HalfCaseResult res;
  nlohmann::json audit{{"theta", theta}, {"diagonal", d}};
  if (std::abs(d - 0.5) > 1e-12) audit["half_tol_window"] = true;

  if (auto groups = detail::exact_difference_groups(other_forms, theta_form)) {
    auto even = detail::all_relations_even(*groups);
    audit["route"] = "nu2-exact";
    nlohmann::json gj = nlohmann::json::array();
    for (const auto& [delta, members] : *groups) {
      nlohmann::json mj = nlohmann::json::array();
      for (const auto& r : members) mj.push_back({r.num, r.den});
      gj.push_back({{"delta", delta}, {"coefficients", mj}});
    }
    audit["groups"] = gj;
    res.status = *even ? verdict_status::not_sedentary : verdict_status::sedentary;
    res.certificate = Certificate{certificate_kind::half_case_parity, audit};
    return res;
  }

  // bounded route: a relation with odd coefficient sum certifies sedentary;
  // exhausting the bound certifies nothing
  int bound = relation_bound_for(diffs.size(), opts.relation_bound);
  double scale = 0.0;
  for (double v : diffs) scale += std::abs(v);
  audit["route"] = "bounded-relation-search";
  audit["bound"] = bound;
  if (!diffs.empty() && diffs.size() <= 6) {
    auto odd = detail::find_relation_if(diffs, bound, opts.relation_tol * scale,
                                        [](const std::vector<long long>& ell) {
                                          long long sum = 0;
                                          for (long long c : ell) sum += c;
                                          return (sum % 2 + 2) % 2 == 1;
                                        });
    if (odd) {
      audit["odd_relation"] = *odd;
      res.status = verdict_status::sedentary;
      res.certificate = Certificate{certificate_kind::half_case_parity, audit};
      return res;
    }
  }
  audit["exhausted"] = true;
  res.certificate = Certificate{certificate_kind::half_case_parity, audit};
  return res;
}

// ---------------------------------------------------------------------------
// Kronecker subset certificate for bipartite vertices with 0 in the support
// ---------------------------------------------------------------------------

struct SubsetCertificate {
  std::vector<int> subset_s;  // eigenvalue indices of the chosen S
  double alpha_mass = 0.0;    // sum of (E_lambda)_{u,u} over S, at least 1/4
  double zeta = 0.0;          // arccos(-1/(4*alpha)) in (pi/2, pi]
  bool zeta_rational = false;
  long long zeta_a = 0, zeta_b = 1;  // zeta = (a/b)*pi when rational
  std::vector<int> s_prime;          // chosen split for the first audited relation
  nlohmann::json relation_audit = nlohmann::json::array();
  int bound_used = 0;
  double approach_time = 0.0;             // zeta / lambda, U(t) <= 0 approached there
  std::optional<double> exact_witness;    // singleton S: U(zeta/lambda) <= 0 exactly
};

inline nlohmann::json to_json(const SubsetCertificate& c) {
  nlohmann::json j{{"subset", c.subset_s},     {"alpha", c.alpha_mass},
                   {"zeta", c.zeta},           {"zeta_rational", c.zeta_rational},
                   {"s_prime", c.s_prime},     {"relation_audit", c.relation_audit},
                   {"bound", c.bound_used},    {"approach_time", c.approach_time}};
  if (c.zeta_rational) {
    j["zeta_a"] = c.zeta_a;
    j["zeta_b"] = c.zeta_b;
  }
  if (c.exact_witness) j["witness_time"] = *c.exact_witness;
  return j;
}

namespace detail {

// every relation over S must admit a split S' whose signed coefficient sum
// D passes the divisibility and 2-adic conditions tied to zeta
inline bool kronecker_conditions_hold(const std::vector<std::vector<long long>>& relations,
                                      std::size_t set_size, bool zeta_rational, long long a,
                                      long long b, nlohmann::json& audit,
                                      std::vector<int>* first_split) {
  for (const auto& ell : relations) {
    bool ok = false;
    for (std::uint32_t split = 0; split < (1u << set_size) && !ok; ++split) {
      long long dsum = 0;
      for (std::size_t i = 0; i < set_size; ++i)
        dsum += (split >> i & 1u) ? -ell[i] : ell[i];
      bool pass;
      if (!zeta_rational) {
        pass = dsum == 0;
      } else if (dsum == 0) {
        pass = true;
      } else {
        pass = dsum % b == 0 && two_adic(dsum) > two_adic(b) - two_adic(a);
      }
      if (pass) {
        nlohmann::json rj{{"relation", ell}, {"d", dsum}};
        std::vector<int> sp;
        for (std::size_t i = 0; i < set_size; ++i)
          if (split >> i & 1u) sp.push_back(static_cast<int>(i));
        rj["s_prime_positions"] = sp;
        audit.push_back(rj);
        if (first_split && first_split->empty()) *first_split = sp;
        ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Exhausts subsets S of the positive support with projector mass >= 1/4,
/// looking for one whose relation lattice satisfies the zeta conditions.
/// Success rules the vertex not sedentary, with cos(lambda t) -> -1/(4 alpha)
/// along a time sequence near zeta/lambda.
inline std::optional<SubsetCertificate> kronecker_subset(const SpectralDecomposition& s,
                                                         const VertexProfile& profile,
                                                         const ClassifyOptions& opts = {}) {
  int zi = s.zero_index();
  if (zi < 0 || !profile.contains(zi) || profile.diagonal_at(zi) >= 0.5)
    fail(errc::precondition_violated, "requires 0 in the support with diagonal below 1/2");
  double ztol = s.cluster_threshold();
  std::vector<int> pos_idx;
  std::vector<double> pos_val, pos_diag;
  for (std::size_t i = 0; i < profile.support.size(); ++i) {
    int idx = profile.support[i];
    if (s.eigenvalues[idx] > ztol) {
      pos_idx.push_back(idx);
      pos_val.push_back(s.eigenvalues[idx]);
      pos_diag.push_back(profile.diagonals[i]);
    }
  }
  const std::size_t k = pos_idx.size();
  if (k == 0) return std::nullopt;
  if (k > 6) fail(errc::support_too_large, "positive support larger than 6");

  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    double alpha = 0.0;
    std::vector<int> chosen;
    std::vector<double> values;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) {
        alpha += pos_diag[i];
        chosen.push_back(pos_idx[i]);
        values.push_back(pos_val[i]);
      }
    if (alpha < 0.25 - 1e-9) continue;

    double c = std::clamp(-1.0 / (4.0 * alpha), -1.0, 1.0);
    double zeta = std::acos(c);
    auto frac = recognize_rational(zeta / std::numbers::pi, opts.zeta_denominator_max,
                                   opts.zeta_rational_tol);

    int bound = relation_bound_for(values.size(), opts.relation_bound);
    double scale = 0.0;
    for (double v : values) scale += std::abs(v);
    auto relations = enumerate_relations(values, bound, opts.relation_tol * scale);
    if (!relations) continue;  // too many relations to audit

    SubsetCertificate cert;
    cert.subset_s = chosen;
    cert.alpha_mass = alpha;
    cert.zeta = zeta;
    cert.zeta_rational = frac.has_value();
    if (frac) {
      cert.zeta_a = frac->first;
      cert.zeta_b = frac->second;
    }
    cert.bound_used = bound;
    std::vector<int> first_split;
    if (!detail::kronecker_conditions_hold(*relations, values.size(), cert.zeta_rational,
                                           cert.zeta_a, cert.zeta_b, cert.relation_audit,
                                           &first_split)) continue;
    for (int p : first_split) cert.s_prime.push_back(chosen[p]);
    cert.approach_time = zeta / values.front();
    if (values.size() == 1) cert.exact_witness = zeta / values.front();
    return cert;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// pendant groups
// ---------------------------------------------------------------------------

struct PendantFinding {
  int vertex = 0;
  Certificate certificate;
  double lower_bound = 0.0;
};

/// Sedentary certificates for vertices in pendant groups. Three or more
/// unweighted pendants are a large twin set; weighted groups get the
/// explicit nullspace projector bounds; a pendant pair is decided by its
/// weight ratio, or by the nullspace condition when the weights agree.
inline std::vector<PendantFinding> pendant_group(const WeightedGraph& g,
                                                 const SpectralDecomposition& s,
                                                 double margin = 1e-9) {
  auto groups = pendant_groups(g);
  if (groups.empty()) fail(errc::no_pendant_group, "no vertex has two or more pendant neighbors");
  int zi = s.zero_index();
  std::vector<PendantFinding> out;
  for (const PendantGroup& grp : groups) {
    const auto& p = grp.pendants;
    std::vector<double> w;
    for (int v : p) w.push_back(edge_weight(g, v, grp.center));

    if (p.size() >= 3) {
      if (g.is_unweighted()) {
        for (int v : p) {
          double d = zi >= 0 ? s.diag(zi, v) : 0.0;
          Certificate c{certificate_kind::twin_set_large,
                        {{"members", p}, {"kind", "independent"}, {"theta", 0.0}, {"diagonal", d}}};
          out.push_back({v, c, 2.0 * d - 1.0});
        }
        continue;
      }
      // best proof bound per vertex over ordered pendant triples
      std::map<int, double> best;
      for (std::size_t iu = 0; iu < p.size(); ++iu)
        for (std::size_t iv = 0; iv < p.size(); ++iv)
          for (std::size_t iw = 0; iw < p.size(); ++iw) {
            if (iu == iv || iu == iw || iv == iw) continue;
            double a = w[iu] / w[iv], b = w[iu] / w[iw];
            double a2 = a * a, b2 = b * b;
            double denom = a2 + a2 * b2 + b2;
            double bu = 1.0 / (1.0 + a2) * (1.0 + a2 * a2 / denom);
            double bv = a2 / (1.0 + a2) * (1.0 + 1.0 / denom);
            double bw = b2 * (1.0 + a2) / denom;
            auto acc = [&](int vert, double bd) {
              auto it = best.find(vert);
              if (it == best.end() || bd > it->second) best[vert] = bd;
            };
            acc(p[iu], bu);
            acc(p[iv], bv);
            acc(p[iw], bw);
          }
      for (auto [v, bd] : best) {
        if (bd > 0.5 + margin) {
          Certificate c{certificate_kind::projection_heavy,
                        {{"eigenvalue", 0.0},
                         {"diagonal", bd},
                         {"pendant_center", grp.center},
                         {"pendants", p},
                         {"proof_bound", true}}};
          out.push_back({v, c, 2.0 * bd - 1.0});
        }
      }
      continue;
    }

    // exactly two pendants
    int u = p[0], v = p[1];
    double wu = w[0], wv = w[1];
    if (std::abs(std::abs(wu) - std::abs(wv)) > 1e-12) {
      // nullspace vector proportional to (1/wu, -1/wv) on {u, v}
      double bu = wv * wv / (wu * wu + wv * wv);
      double bv = wu * wu / (wu * wu + wv * wv);
      int fire = bu > 0.5 ? u : v;
      double bd = std::max(bu, bv);
      Certificate c{certificate_kind::pendant_group,
                    {{"center", grp.center},
                     {"pendants", p},
                     {"weights", {wu, wv}},
                     {"case", "unequal-weights"},
                     {"diagonal_bound", bd}}};
      out.push_back({fire, c, 2.0 * bd - 1.0});
    } else {
      // equal weights: sedentary or pretty good state transfer; decide by
      // the nullspace condition via the actual projector diagonal
      if (zi >= 0 && s.multiplicities[zi] >= 2) {
        double du = s.diag(zi, u), dv = s.diag(zi, v);
        if (du > 0.5 + margin && dv > 0.5 + margin) {
          for (int x : {u, v}) {
            Certificate c{certificate_kind::pendant_group,
                          {{"center", grp.center},
                           {"pendants", p},
                           {"weights", {wu, wv}},
                           {"case", "equal-weights-nullspace"},
                           {"diagonal", s.diag(zi, x)}}};
            out.push_back({x, c, 2.0 * s.diag(zi, x) - 1.0});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PendantFinding& a, const PendantFinding& b) { return a.vertex < b.vertex; });
  return out;
}

// ---------------------------------------------------------------------------
// the cascade
// ---------------------------------------------------------------------------

namespace detail {

inline void attach_scan(Verdict& v, const SpectralDecomposition& s, int u,
                        const ClassifyOptions& opts) {
  if (!opts.evidence_scan) return;
  ScanResult scan = numeric_scan(s, u, {opts.horizon, opts.step});
  v.numeric_min = scan.global_min;
  v.horizon = scan.horizon;
}

inline Verdict sedentary_verdict(int u, double bound, Certificate cert) {
  Verdict v;
  v.vertex = u;
  v.status = verdict_status::sedentary;
  v.lower_bound = bound;
  v.certificate = std::move(cert);
  return v;
}

inline Verdict not_sedentary_verdict(int u, Certificate cert,
                                     std::optional<double> witness = std::nullopt) {
  Verdict v;
  v.vertex = u;
  v.status = verdict_status::not_sedentary;
  v.witness_time = witness;
  v.certificate = std::move(cert);
  return v;
}

// sedentary constant for a half-case firing: exact over one period when
// periodic, otherwise the observed scan minimum
inline double half_case_bound(const SpectralDecomposition& s, int u, const ClassifyOptions& opts,
                              Certificate& cert) {
  ScanOptions so{opts.horizon, opts.step};
  ScanResult scan = numeric_scan(s, u, so);
  cert.data["bound_mode"] = scan.period_exact ? "period-exact" : "observed";
  return scan.global_min;
}

}  // namespace detail

namespace detail {

inline Verdict classify_vertex_impl(const WeightedGraph& g, const SpectralDecomposition& s, int u,
                                    const ClassifyOptions& opts);

}  // namespace detail

/// Applies the certificate cascade in a fixed order; the first firing
/// certificate decides. Falls back to the numeric scanner, which for a
/// periodic vertex is itself decisive over one period. Sedentary verdicts
/// carry the certified bound plus the observed scan minimum.
inline Verdict classify_vertex(const WeightedGraph& g, const SpectralDecomposition& s, int u,
                               const ClassifyOptions& opts = {}) {
  Verdict v = detail::classify_vertex_impl(g, s, u, opts);
  if (v.sedentary() && !v.numeric_min) detail::attach_scan(v, s, u, opts);
  VertexProfile profile = support(s, u, opts.support_tol);
  if (!profile.ambiguous.empty()) {
    nlohmann::json amb = nlohmann::json::array();
    for (int idx : profile.ambiguous) amb.push_back(s.eigenvalues[idx]);
    v.certificate.data["support_ambiguity"] = amb;
  }
  return v;
}

namespace detail {

inline Verdict classify_vertex_impl(const WeightedGraph& g, const SpectralDecomposition& s, int u,
                                    const ClassifyOptions& opts) {
  require_connected(g, "classify_vertex");
  if (u < 0 || u >= g.n) fail(errc::index_out_of_range, "vertex " + std::to_string(u));
  VertexProfile profile = support(s, u, opts.support_tol);
  auto bip = bipartition(g);
  int zi = s.zero_index();
  bool zero_in_support = zi >= 0 && profile.contains(zi);
  double e0 = zero_in_support ? profile.diagonal_at(zi) : 0.0;

  // 1. large twin set
  if (g.is_unweighted()) {
    for (const TwinSet& w : twin_sets(g)) {
      if (w.members.size() < 3) continue;
      if (std::find(w.members.begin(), w.members.end(), u) == w.members.end()) continue;
      double theta = w.kind == twin_kind::independent ? 0.0 : -1.0;
      int idx = s.index_of(theta, 1e-6);
      if (idx < 0) continue;
      double d = s.diag(idx, u);
      Certificate c{certificate_kind::twin_set_large,
                    {{"members", w.members},
                     {"kind", w.kind == twin_kind::independent ? "independent" : "clique"},
                     {"theta", theta},
                     {"diagonal", d}}};
      return detail::sedentary_verdict(u, 2.0 * d - 1.0, std::move(c));
    }
  }

  // 2. heavy projector diagonal
  if (auto c = projection_heavy(s, profile, opts.heavy_margin)) {
    double bound = projection_heavy_bound(*c);
    return detail::sedentary_verdict(u, bound, std::move(*c));
  }

  // 3. pendant group
  if (!pendant_groups(g).empty()) {
    for (const PendantFinding& f : pendant_group(g, s, opts.heavy_margin))
      if (f.vertex == u) return detail::sedentary_verdict(u, f.lower_bound, f.certificate);
  }

  // 4. unique perfect matching / even distinct eigenvalue count
  if (bip) {
    if (auto c = unique_pm(g, s)) {
      Verdict v = detail::not_sedentary_verdict(u, std::move(*c));
      detail::attach_scan(v, s, u, opts);
      return v;
    }
  }

  // 5. bipartite with 0 outside the support
  if (auto c = bipartite_zero_free(g, s, profile)) {
    Verdict v = detail::not_sedentary_verdict(u, std::move(*c));
    detail::attach_scan(v, s, u, opts);
    return v;
  }

  // 6-7. zero-in-support tests
  if (bip && zero_in_support && e0 < 0.5 - opts.half_tol) {
    if (auto f = cor18_tests(s, profile, opts)) {
      Verdict v = detail::not_sedentary_verdict(u, f->certificate, f->witness_time);
      if (!f->witness_time) detail::attach_scan(v, s, u, opts);
      return v;
    }
  }

  // 8. half case
  std::optional<Certificate> half_audit;
  for (std::size_t i = 0; i < profile.support.size(); ++i) {
    if (std::abs(profile.diagonals[i] - 0.5) > opts.half_tol) continue;
    HalfCaseResult r = half_case_parity(s, profile, profile.support[i], opts);
    if (r.status == verdict_status::sedentary) {
      Certificate cert = r.certificate;
      double bound = detail::half_case_bound(s, u, opts, cert);
      return detail::sedentary_verdict(u, bound, std::move(cert));
    }
    if (r.status == verdict_status::not_sedentary) {
      Verdict v = detail::not_sedentary_verdict(u, r.certificate);
      detail::attach_scan(v, s, u, opts);
      return v;
    }
    half_audit = r.certificate;
  }

  // 9. Kronecker subset conditions
  if (bip && zero_in_support && e0 < 0.5 - opts.half_tol &&
      std::count_if(profile.support.begin(), profile.support.end(),
                    [&](int idx) { return s.eigenvalues[idx] > s.cluster_threshold(); }) <= 6) {
    if (auto sub = kronecker_subset(s, profile, opts)) {
      Certificate c{certificate_kind::kronecker_subset, to_json(*sub)};
      Verdict v = detail::not_sedentary_verdict(u, std::move(c), sub->exact_witness);
      if (!sub->exact_witness) detail::attach_scan(v, s, u, opts);
      return v;
    }
  }

  // 10. numeric scan fallback
  ScanOptions so{opts.horizon, opts.step};
  ScanResult scan = numeric_scan(s, u, so);
  PeriodicityReport per = periodicity(s, profile);
  if (per.periodic && scan.period_exact) {
    // over one period the sampled minimum is the infimum
    if (scan.global_min <= 1e-9) {
      Certificate c{certificate_kind::numeric_witness,
                    {{"mode", "period-zero"}, {"period", *per.period}, {"min", scan.global_min}}};
      Verdict v = detail::not_sedentary_verdict(u, std::move(c), scan.argmin);
      v.numeric_min = scan.global_min;
      v.horizon = scan.horizon;
      return v;
    }
    if (scan.global_min >= 1e-6) {
      Certificate c{certificate_kind::numeric_witness,
                    {{"mode", "period-min"}, {"period", *per.period}, {"argmin", scan.argmin}}};
      Verdict v = detail::sedentary_verdict(u, scan.global_min, std::move(c));
      v.numeric_min = scan.global_min;
      v.horizon = scan.horizon;
      return v;
    }
  }
  if (bip) {
    // the diagonal is real for bipartite graphs; a negative sample proves a
    // zero crossing
    double worst = 0.0, worst_t = 0.0;
    for (double t : scan.times) {
      if (t == 0.0) continue;
      double re = walk_diagonal(profile, s, t).real();
      if (re < worst) {
        worst = re;
        worst_t = t;
      }
    }
    if (worst <= -1e-9) {
      Certificate c{certificate_kind::numeric_witness,
                    {{"mode", "sign-crossing"}, {"value", worst}}};
      Verdict v = detail::not_sedentary_verdict(u, std::move(c), worst_t);
      v.numeric_min = scan.global_min;
      v.horizon = scan.horizon;
      return v;
    }
  }
  Verdict v;
  v.vertex = u;
  v.status = verdict_status::inconclusive;
  v.numeric_min = scan.global_min;
  v.horizon = scan.horizon;
  Certificate c{certificate_kind::numeric_witness,
                {{"mode", "evidence"}, {"min", scan.global_min}, {"horizon", scan.horizon}}};
  if (half_audit) c.data["half_case_audit"] = half_audit->data;
  v.certificate = std::move(c);
  return v;
}

}  // namespace detail

inline std::vector<Verdict> classify_all(const WeightedGraph& g, const SpectralDecomposition& s,
                                         const ClassifyOptions& opts = {}) {
  std::vector<Verdict> out;
  out.reserve(g.n);
  for (int u = 0; u < g.n; ++u) out.push_back(classify_vertex(g, s, u, opts));
  return out;
}

// ---------------------------------------------------------------------------
// verdict transfer under products and doubles
// ---------------------------------------------------------------------------

/// Sedentary factors multiply their bounds; one not-sedentary factor kills
/// the product vertex; anything else is inconclusive.
inline Verdict cartesian_classify(const Verdict& vx, const Verdict& vy) {
  Verdict v;
  v.certificate = Certificate{certificate_kind::cartesian_combine,
                              {{"factor_status", {verdict_status_name(vx.status),
                                                  verdict_status_name(vy.status)}}}};
  if (vx.sedentary() && vy.sedentary()) {
    v.status = verdict_status::sedentary;
    v.lower_bound = *vx.lower_bound * *vy.lower_bound;
  } else if (vx.not_sedentary() || vy.not_sedentary()) {
    v.status = verdict_status::not_sedentary;
  } else {
    v.status = verdict_status::inconclusive;
  }
  return v;
}

/// Verdict for both copies of u in the tensor double of a nonbipartite
/// graph: decided by (E_0)_{u,u} being absent, above 1/2, or exactly 1/2
/// (status transfer); otherwise inconclusive.
inline Verdict double_classify(const WeightedGraph& g, const SpectralDecomposition& s, int u,
                               const Verdict& verdict_u, const ClassifyOptions& opts = {}) {
  require_connected(g, "double_classify");
  if (bipartition(g)) fail(errc::bipartite_input, "double of a bipartite graph disconnects");
  VertexProfile profile = support(s, u, opts.support_tol);
  int zi = s.zero_index();
  Verdict v;
  v.vertex = u;
  if (zi < 0 || !profile.contains(zi)) {
    v.status = verdict_status::not_sedentary;
    v.certificate = Certificate{certificate_kind::double_transfer, {{"rule", "zero-free"}}};
    return v;
  }
  double e0 = profile.diagonal_at(zi);
  if (e0 > 0.5 + opts.heavy_margin) {
    v.status = verdict_status::sedentary;
    v.lower_bound = 2.0 * e0 - 1.0;
    v.certificate = Certificate{certificate_kind::double_transfer,
                                {{"rule", "heavy-zero-diagonal"}, {"e0", e0}}};
    return v;
  }
  if (std::abs(e0 - 0.5) <= opts.half_tol) {
    v.status = verdict_u.status;
    v.certificate = Certificate{certificate_kind::double_transfer,
                                {{"rule", "half-transfer"},
                                 {"source_status", verdict_status_name(verdict_u.status)}}};
    if (v.sedentary()) {
      // constant for the copies, evaluated on the double itself
      WeightedGraph dg = bipartite_double(g);
      SpectralDecomposition ds = eigendecompose(dg);
      ScanResult scan = numeric_scan(ds, u, {opts.horizon, opts.step});
      v.lower_bound = scan.global_min;
      v.certificate.data["bound_mode"] = scan.period_exact ? "period-exact" : "observed";
    }
    return v;
  }
  v.status = verdict_status::inconclusive;
  v.certificate = Certificate{certificate_kind::double_transfer,
                              {{"rule", "none"}, {"e0", e0}}};
  return v;
}

}  // namespace qwsed
