#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace qwsed {

enum class certificate_kind {
  projection_heavy,
  half_case_parity,
  twin_set_large,
  pendant_group,
  bipartite_zero_free,
  unique_perfect_matching,
  even_distinct_eigenvalues,
  single_positive,
  equal_two_adic,
  linear_independent,
  kronecker_subset,
  cartesian_combine,
  double_transfer,
  numeric_witness,
};

inline const char* certificate_kind_name(certificate_kind k) {
  switch (k) {
    case certificate_kind::projection_heavy: return "projection_heavy";
    case certificate_kind::half_case_parity: return "half_case_parity";
    case certificate_kind::twin_set_large: return "twin_set_large";
    case certificate_kind::pendant_group: return "pendant_group";
    case certificate_kind::bipartite_zero_free: return "bipartite_zero_free";
    case certificate_kind::unique_perfect_matching: return "unique_perfect_matching";
    case certificate_kind::even_distinct_eigenvalues: return "even_distinct_eigenvalues";
    case certificate_kind::single_positive: return "single_positive";
    case certificate_kind::equal_two_adic: return "equal_two_adic";
    case certificate_kind::linear_independent: return "linear_independent";
    case certificate_kind::kronecker_subset: return "kronecker_subset";
    case certificate_kind::cartesian_combine: return "cartesian_combine";
    case certificate_kind::double_transfer: return "double_transfer";
    case certificate_kind::numeric_witness: return "numeric_witness";
  }
  return "";
}

/// A re-checkable reason for a verdict. The payload carries whatever the
/// kind needs to replay the check against (G, SpectralDecomposition).
struct Certificate {
  certificate_kind kind = certificate_kind::numeric_witness;
  nlohmann::json data = nlohmann::json::object();
};

enum class verdict_status { sedentary, not_sedentary, inconclusive };

inline const char* verdict_status_name(verdict_status s) {
  switch (s) {
    case verdict_status::sedentary: return "sedentary";
    case verdict_status::not_sedentary: return "not_sedentary";
    case verdict_status::inconclusive: return "inconclusive";
  }
  return "";
}

struct Verdict {
  int vertex = 0;
  verdict_status status = verdict_status::inconclusive;
  Certificate certificate;
  std::optional<double> lower_bound;   // sedentary: certified inf bound in (0,1]
  std::optional<double> witness_time;  // not sedentary: Re U(t*) <= 0 holds there
  std::optional<double> numeric_min;   // scanner evidence
  std::optional<double> horizon;

  bool sedentary() const { return status == verdict_status::sedentary; }
  bool not_sedentary() const { return status == verdict_status::not_sedentary; }
  bool inconclusive() const { return status == verdict_status::inconclusive; }
};

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["vertex"] = v.vertex;
  j["status"] = verdict_status_name(v.status);
  j["certificate"] = certificate_kind_name(v.certificate.kind);
  if (v.lower_bound) j["lower_bound"] = *v.lower_bound;
  if (v.witness_time) j["witness_time"] = *v.witness_time;
  if (v.numeric_min) j["numeric_min"] = *v.numeric_min;
  if (v.horizon) j["horizon"] = *v.horizon;
  if (!v.certificate.data.empty()) j["certificate_data"] = v.certificate.data;
  return j;
}

}  // namespace qwsed
