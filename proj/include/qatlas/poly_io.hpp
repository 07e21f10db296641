#ifndef QATLAS_POLY_IO_HPP
#define QATLAS_POLY_IO_HPP

#include <string>
#include <string_view>

#include "qatlas/polynomial.hpp"

namespace qatlas {

// Grammar (whitespace ignored):
//
//   poly    = [ "+" | "-" ] term { ( "+" | "-" ) term }
//   term    = factor { "*" factor }
//   factor  = primary [ "^" integer ]
//   primary = integer [ "/" integer ] | variable | "(" poly ")"
//   variable = letter { letter | digit | "_" } [ "[" integer "]" ]
//
// Literals are reduced modulo p over a prime field.
template <class F>
Polynomial<F> parse_polynomial(std::string_view src, const RingPtr<F>& ring);

/// Canonical text: terms in ring order, "c*x0^2*x1" style, symmetric residues mod p.
template <class F>
std::string to_string(const Polynomial<F>& p);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace qatlas

#endif
