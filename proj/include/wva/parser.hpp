// Parse and pretty-print the field-expression grammar:
//   a1, B[1,2], G[2,3], c, d, der(n, X), no(X, Y),
//   vop{a1: -1/(k+4), c: 1}, and scalar-linear combinations.
// Pole maps print as {n: expr, ...}.  parse(print(x)) == x for canonical x.
#pragma once

#include "wva/engine.hpp"

#include <string>

namespace wva {

// Parses the grammar into a raw tree (no presentation needed).
RawPtr parse_field(const std::string& text);

// Parse + canonicalize over the engine's presentation.
FieldExpr parse_canonical(const Engine& eng, const std::string& text);

std::string print_monomial(const AlgebraPresentation& p, const Monomial& m);
std::string print_field(const AlgebraPresentation& p, const FieldExpr& f);
std::string print_poles(const AlgebraPresentation& p, const OPEResult& r);
std::string print_lambda(const AlgebraPresentation& p, const LambdaPoly& l);

}  // namespace wva
