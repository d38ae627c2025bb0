#ifndef KOSZUL_PARSER_HPP
#define KOSZUL_PARSER_HPP

#include <string>

#include "koszul/forms.hpp"

namespace koszul {

/// Expression grammar (whitespace-insensitive):
///   form     := term ('+' term)*
///   term     := [rational '*'] [monomial '*'] [wedge]   (at least one part)
///   rational := ['-'] digits ['/' digits]
///   monomial := xvar ('*' xvar)*       xvar := 'x' index ['**' digits]
///   wedge    := 'dx' index ('^' 'dx' index)*
/// '^' is reserved for the wedge product, '**' for scalar powers. Repeated
/// wedge indices normalize to zero ("dx1^dx1" is accepted). Indices are
/// 1-based and must stay within the dimension.
PolyForm parse_form(const std::string& src, int dim);

/// field := fterm ('+' fterm)*
///   fterm := [rational '*'] [monomial '*'] 'd' index
PolyVectorField parse_field(const std::string& src, int dim);

}  // namespace koszul

#endif
