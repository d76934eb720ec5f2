#pragma once

#include <string>
#include <string_view>

#include "expweyl/errors.hpp"
#include "expweyl/grading.hpp"
#include "expweyl/homology.hpp"
#include "expweyl/lie.hpp"

namespace expweyl
{

// Canonical text rendering. Terms appear in descending term order, factors
// as E's, exponentials, powers, then derivatives:
//   "x_1*D_1 + 1", "E_1^(-2)*exp((0,1)*x_1)*x_1^3*D_1^2", "1/2*x_1".
// parse(format(P)) == P for every element.
std::string format(const Element &p);
// Same rendering with y_i in place of D_i.
std::string format(const GrElement &u);
std::string format(const Scalar &s, const AlgebraSignature &sig);
// "c*[f_0 | f_1 | ...]" terms joined like element terms; "0" when empty.
std::string format(const Chain &c);
// The derivation as the operator sum_i f_i D_i.
std::string format(const DerivationElement &u);
// Integer for multiples of g_1, otherwise a coordinate tuple "(c1,..,cr)".
std::string format(const GroupElement &g);

// Grammar (whitespace insignificant):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*        divisors must be nonzero constants
//   factor  := '-' factor | primary ['^' exponent]
//   primary := integer | '(' expr ')' | x_i | D_i | y_i | E_i | hbar | name
//            | 'exp' '(' [group ['*']] x_i ')'
//   exponent:= integer | '(' group ')'
//   group   := signed integer, tuple '(c1,..,cr)', or integer combination of
//              1 and generator names such as 1+2*g2
// Products are normal-ordered through mul, so input order is respected.
// Throws ParseError (SyntaxError, UnknownSymbol, SignatureMismatch).
Element parse_element(const SignaturePtr &sig, std::string_view src);
// Commutative variant; D_i and y_i both denote y_i.
GrElement parse_symbol(const SignaturePtr &sig, std::string_view src);
// An expression that must evaluate to a constant.
Scalar parse_scalar(const SignaturePtr &sig, std::string_view src);
// A group element in the exponent syntax.
GroupElement parse_group(const SignaturePtr &sig, std::string_view src);

} // namespace expweyl
