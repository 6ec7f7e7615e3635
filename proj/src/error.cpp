#include "transfun/error.hpp"

namespace transfun {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::negative_mass: return "NegativeMass";
    case Errc::unknown_atom: return "UnknownAtom";
    case Errc::non_finite: return "NonFinite";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::negative_scalar: return "NegativeScalar";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::missing_column: return "MissingColumn";
    case Errc::bound_violated: return "BoundViolated";
    case Errc::invalid_space: return "InvalidSpace";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace transfun
