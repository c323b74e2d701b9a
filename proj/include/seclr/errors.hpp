#pragma once

#include <stdexcept>
#include <string>

namespace seclr {

enum class Errc {
  invalid_params,
  overflow,
  insufficient_shares,
  duplicate_eval_point,
  zero_inverse,
  shape_mismatch,
  scale_mismatch,
  layout_mismatch,
  dimension_mismatch,
  singular_system,
  missing_submission,
  iteration_mismatch,
  invalid_spec,
  parse_error,
  non_binary_response,
  missing_column,
  too_many_partitions,
  not_converged,
  io_error,
};

// Single exception type carrying a machine-checkable error code; tests and
// the CLI exit-code mapping dispatch on errc().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc errc() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace seclr
