#include "kgyukawa/errors.hpp"

#include <cmath>

namespace kgy {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::ComplexChannel: return "ComplexChannel";
    case ErrorKind::NoRootInBracket: return "NoRootInBracket";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
  }
  return "Unknown";
}

ConstraintViolation::ConstraintViolation(std::string coefficient, double value)
    : Error(ErrorKind::ConstraintViolation,
            "NU admissibility bound violated by " + coefficient + " = " +
                std::to_string(value)),
      coefficient_(std::move(coefficient)),
      value_(value) {}

double require_finite(double x, std::string_view what) {
  if (!std::isfinite(x)) {
    throw NonFinite(std::string(what) + " is not finite");
  }
  return x;
}

}  // namespace kgy
