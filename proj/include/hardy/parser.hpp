#pragma once

#include <string>
#include <vector>

#include "hardy/normal_form.hpp"

namespace hardy {

/// Parses an expression in t (alias n) into normal form.
///
///   expr    := term (('+'|'-') term)*
///   term    := unary (('*'|'/')? unary)*        juxtaposition multiplies: "2t"
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   primary := number | 't' | 'n' | 'log' '(' t ')' | 'sqrt' '(' const ')' | '(' expr ')'
///   exponent:= ['-'] number ['/' number] | 'sqrt' '(' const ')' | '(' const ')'
///
/// Division is allowed by a single term only (t^3/log(t)). A non-integer power
/// needs a base that is a single term with coefficient 1.
/// Throws ParseError for malformed text and UnsupportedForm for recognised
/// functions outside the class (exp, sin, log(log(t)), ...).
HardyNormalForm parse(const std::string& text);

/// "{t, 2t, t^2}" or "t, 2t, t^2" -> members in order.
std::vector<HardyNormalForm> parse_family(const std::string& text);

}  // namespace hardy
