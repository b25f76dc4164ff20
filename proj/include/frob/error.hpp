#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frob {

enum class ErrorKind {
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  NotPrime,
  ModulusMismatch,
  ArityMismatch,
  OrderMismatch,
  NotAPrimePower,
  BudgetExceeded,
  ZeroPolynomial,
  ConstantInput,
  ConstantTermNonzero,
  ImproperIdeal,
  NotDegreeThree,
  NotThreeVariables,
  InvalidPair,
  InvalidSelfIntersection,
  InvalidGraph,
  SingularSystem,
  NotHomogeneous,
  DegenerateDehomogenization,
  InvalidArgument,
};

std::string_view errorName(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the typed kinds above;
/// the CLI prints errorName() verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return errorName(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace frob
