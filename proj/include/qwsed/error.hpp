#pragma once

#include <stdexcept>
#include <string>

namespace qwsed {

enum class errc {
  duplicate_edge,
  zero_weight,
  self_loop,
  index_out_of_range,
  disconnected,
  not_unweighted,
  arity_mismatch,
  bad_root,
  zero_input,
  too_many_values,
  unrecognized_eigenvalues,
  not_half_case,
  precondition_violated,
  support_too_large,
  no_pendant_group,
  bipartite_input,
  convergence_failure,
  bad_params,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::zero_weight: return "ZeroWeight";
    case errc::self_loop: return "SelfLoop";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::disconnected: return "Disconnected";
    case errc::not_unweighted: return "NotUnweighted";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::bad_root: return "BadRoot";
    case errc::zero_input: return "ZeroInput";
    case errc::too_many_values: return "TooManyValues";
    case errc::unrecognized_eigenvalues: return "UnrecognizedEigenvalues";
    case errc::not_half_case: return "NotHalfCase";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::support_too_large: return "SupportTooLarge";
    case errc::no_pendant_group: return "NoPendantGroup";
    case errc::bipartite_input: return "BipartiteInput";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::bad_params: return "BadParams";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

/// Library-wide exception; `code()` identifies the failure class.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace qwsed
