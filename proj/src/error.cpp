#include "frob/error.hpp"

namespace frob {

std::string_view errorName(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotAPrimePower: return "NotAPrimePower";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::ConstantTermNonzero: return "ConstantTermNonzero";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::NotDegreeThree: return "NotDegreeThree";
    case ErrorKind::NotThreeVariables: return "NotThreeVariables";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::InvalidSelfIntersection: return "InvalidSelfIntersection";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegenerateDehomogenization: return "DegenerateDehomogenization";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace frob
