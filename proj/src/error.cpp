#include "telescope/error.hpp"

namespace telescope {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::invalid_relator: return "invalid-relator";
    case ErrorCode::not_certified: return "not-certified";
    case ErrorCode::unknown_block: return "unknown-block";
    case ErrorCode::registry_validation: return "registry-validation";
    case ErrorCode::non_integral_chi: return "non-integral-chi";
    case ErrorCode::inconsistent_input: return "inconsistent-input";
    case ErrorCode::invalid_recipe: return "invalid-recipe";
    case ErrorCode::consumed_torus: return "consumed-torus";
    case ErrorCode::degenerate_surgery: return "degenerate-surgery";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::pi1_mismatch: return "pi1-mismatch";
    case ErrorCode::spin_state: return "spin-state";
    case ErrorCode::io: return "io";
    case ErrorCode::catalog_corrupt: return "catalog-corrupt";
  }
  return "unknown";
}

}  // namespace telescope
