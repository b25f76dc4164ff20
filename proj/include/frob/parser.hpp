#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

// Grammar (whitespace between tokens is ignored):
//
//   expr    = ["+" | "-"] term { ("+" | "-") term } ;
//   term    = unary { "*" unary } ;
//   unary   = ("+" | "-") unary | power ;
//   power   = atom [ "^" integer ] ;
//   atom    = integer | name | "(" expr ")" ;
//   integer = digit { digit } ;
//   name    = (letter | "_") { letter | digit | "_" } ;
//
// Juxtaposition ("2x", "x y") is rejected; every name must be declared.

/// Parses text into a polynomial over F_p with the given ordered variables.
/// Throws SyntaxError (message carries the 0-based offset), UnknownVariable or
/// NegativeExponent.
Polynomial parsePolynomial(std::string_view text, const PolyRing& ring);

Polynomial parsePolynomial(std::string_view text, PrimeModulus p, std::vector<std::string> variables);

/// Splits "x,y,z" into names and checks they are distinct identifiers.
std::vector<std::string> parseVariableList(std::string_view text);

}  // namespace frob
