#include "koszul/courant.hpp"

#include "koszul/errors.hpp"

namespace koszul {

PolyForm pairing(const CourantSection& s1, const CourantSection& s2, PairingKind kind) {
  PolyForm a = contract(s1.vf, s2.form);
  PolyForm b = contract(s2.vf, s1.form);
  PolyForm sum = (kind == PairingKind::plus) ? a + b : a - b;
  return Rational(1, 2) * sum;
}

CourantSection courant_bracket(const CourantSection& s1, const CourantSection& s2,
                               const PolyForm& sigma) {
  if (!is_closed(sigma)) throw InvalidInput("courant_bracket: sigma is not closed");
  CourantSection out;
  out.vf = vf_bracket(s1.vf, s2.vf);
  out.form = lie_derivative(s1.vf, s2.form) - lie_derivative(s2.vf, s1.form) -
             de_rham(pairing(s1, s2, PairingKind::minus)) +
             contract(s1.vf, contract(s2.vf, sigma));
  return out;
}

CourantSection courant_bracket_alt(const CourantSection& s1, const CourantSection& s2,
                                   const PolyForm& sigma) {
  if (!is_closed(sigma)) throw InvalidInput("courant_bracket_alt: sigma is not closed");
  CourantSection out;
  out.vf = vf_bracket(s1.vf, s2.vf);
  out.form = de_rham(pairing(s1, s2, PairingKind::minus)) +
             contract(s1.vf, de_rham(s2.form)) - contract(s2.vf, de_rham(s1.form)) +
             contract(s1.vf, contract(s2.vf, sigma));
  return out;
}

bool hamiltonian_check(const PolyVectorField& X, const PolyForm& alpha, const PolyForm& sigma) {
  return (contract(X, sigma) + de_rham(alpha)).is_zero();
}

}  // namespace koszul
