#pragma once

#include <stdexcept>
#include <string>

namespace telescope {

enum class ErrorCode {
  parse,
  invalid_relator,
  not_certified,
  unknown_block,
  registry_validation,
  non_integral_chi,
  inconsistent_input,
  invalid_recipe,
  consumed_torus,
  degenerate_surgery,
  precondition,
  pi1_mismatch,
  spin_state,
  io,
  catalog_corrupt,
};

const char* to_string(ErrorCode code);

/// Every failure the engine reports is an Error carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace telescope
