#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

enum class ErrorCode {
  invalid_form,
  invalid_argument,
  malformed_word,
  zero_base,
  not_found,
  degenerate_point,
  non_generic_trace,
  retries_exhausted,
  degree_collapse,
  no_convergence,
  double_root,
  zero_constant_term,
  not_unimodular,
  singular_transition,
  internal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_form: return "InvalidForm";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::malformed_word: return "MalformedWord";
    case ErrorCode::zero_base: return "ZeroBase";
    case ErrorCode::not_found: return "NotFound";
    case ErrorCode::degenerate_point: return "DegeneratePoint";
    case ErrorCode::non_generic_trace: return "NonGenericTrace";
    case ErrorCode::retries_exhausted: return "RetriesExhausted";
    case ErrorCode::degree_collapse: return "DegreeCollapse";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::double_root: return "DoubleRoot";
    case ErrorCode::zero_constant_term: return "ZeroConstantTerm";
    case ErrorCode::not_unimodular: return "NotUnimodular";
    case ErrorCode::singular_transition: return "SingularTransition";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

/// Engine error. `invalid_input()` separates bad requests (CLI exit code 2)
/// from failed computations (exit code 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool invalid_input() const noexcept {
    return code_ == ErrorCode::invalid_form || code_ == ErrorCode::invalid_argument ||
           code_ == ErrorCode::malformed_word || code_ == ErrorCode::zero_base;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace twobridge
