#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transfun {

enum class Errc {
  negative_mass,
  unknown_atom,
  non_finite,
  space_mismatch,
  negative_scalar,
  dimension_mismatch,
  missing_column,
  bound_violated,
  invalid_space,
  invalid_spec,
  invalid_config,
  parse_error,
  internal_inconsistency,
};

std::string_view to_string(Errc code);

// All library failures are reported through this type; code() drives the
// CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace transfun
