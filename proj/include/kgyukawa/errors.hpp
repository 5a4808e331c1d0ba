#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgy {

enum class ErrorKind {
  InvalidArgument,
  DomainError,
  NegativeDiscriminant,
  ConstraintViolation,
  ComplexChannel,
  NoRootInBracket,
  OutOfDomain,
  NonFinite,
  NormalizationFailure,
  ConvergenceFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every typed failure raised by the solver library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& what) : Error(K, what) {}
};

using InvalidArgument = TypedError<ErrorKind::InvalidArgument>;
using DomainError = TypedError<ErrorKind::DomainError>;
using NegativeDiscriminant = TypedError<ErrorKind::NegativeDiscriminant>;
using ComplexChannel = TypedError<ErrorKind::ComplexChannel>;
using NoRootInBracket = TypedError<ErrorKind::NoRootInBracket>;
using OutOfDomain = TypedError<ErrorKind::OutOfDomain>;
using NonFinite = TypedError<ErrorKind::NonFinite>;
using NormalizationFailure = TypedError<ErrorKind::NormalizationFailure>;
using ConvergenceFailure = TypedError<ErrorKind::ConvergenceFailure>;

/// Carries the name of the NU coefficient that broke its admissibility bound.
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(std::string coefficient, double value);
  const std::string& coefficient() const noexcept { return coefficient_; }
  double value() const noexcept { return value_; }

 private:
  std::string coefficient_;
  double value_;
};

/// Throws NonFinite when `x` is NaN or infinite; returns `x` otherwise.
double require_finite(double x, std::string_view what);

}  // namespace kgy
