#ifndef KOSZUL_COURANT_HPP
#define KOSZUL_COURANT_HPP

#include "koszul/forms.hpp"

namespace koszul {

/// Section of E^(r) = TM + wedge^r T*M: a vector field paired with an
/// r-form. The anchor is the projection onto the field.
struct CourantSection {
  PolyVectorField vf;
  PolyForm form;
};

enum class PairingKind { plus, minus };

/// (1/2)(iota_{x1} a2 +/- iota_{x2} a1), of form-degree r-1.
PolyForm pairing(const CourantSection& s1, const CourantSection& s2, PairingKind kind);

/// sigma-twisted higher Courant bracket,
///   ( [x1,x2],
///     L_{x1} a2 - L_{x2} a1 - d<s1,s2>_- + iota_{x1} iota_{x2} sigma ).
/// sigma must be closed of form-degree r+2 (r the form part degree).
CourantSection courant_bracket(const CourantSection& s1, const CourantSection& s2,
                               const PolyForm& sigma);

/// Alternative expansion through the Cartan formula,
///   d<s1,s2>_- + iota_{x1} d a2 - iota_{x2} d a1 + iota_{x1} iota_{x2} sigma;
/// agrees with courant_bracket, used as a cross-check.
CourantSection courant_bracket_alt(const CourantSection& s1, const CourantSection& s2,
                                   const PolyForm& sigma);

/// iota_X sigma + d alpha == 0, exactly.
bool hamiltonian_check(const PolyVectorField& X, const PolyForm& alpha, const PolyForm& sigma);

}  // namespace koszul

#endif
