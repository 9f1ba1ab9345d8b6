#include "omega/error.hpp"

namespace omega {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::schema: return "SchemaError";
    case ErrorKind::group_axiom: return "GroupAxiomViolation";
    case ErrorKind::constant: return "ConstantViolation";
    case ErrorKind::unknown_operation: return "UnknownOperation";
    case ErrorKind::arity_mismatch: return "ArityMismatch";
    case ErrorKind::size_guard: return "SizeGuardExceeded";
    case ErrorKind::polarization_unsupported: return "PolarizationUnsupported";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::validation: return "ValidationError";
    case ErrorKind::invariant: return "InvariantViolation";
  }
  return "Error";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::size_guard:
    case ErrorKind::polarization_unsupported: return 2;
    case ErrorKind::invariant: return 3;
    default: return 1;
  }
}

void fail(ErrorKind kind, std::string const& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace omega
