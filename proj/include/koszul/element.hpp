#ifndef KOSZUL_ELEMENT_HPP
#define KOSZUL_ELEMENT_HPP

#include <memory>
#include <string>
#include <variant>

#include "koszul/forms.hpp"
#include "koszul/gradedpoly.hpp"
#include "koszul/rational.hpp"

namespace koszul {

/// Homogeneous element of g_r = Cartan x Omega[r] (and of the Cartan algebra
/// itself, with the form slot unused): a form part in Omega[r], a degree -1
/// contraction part X_[1], and a degree 0 Lie part Y. The shift r lives in
/// the enclosing space, not here.
struct SmallGElement {
  PolyForm form;
  PolyVectorField iota;
  PolyVectorField lie;

  bool is_zero() const { return form.is_zero() && iota.is_zero() && lie.is_zero(); }
  friend bool operator==(const SmallGElement&, const SmallGElement&) = default;
};

SmallGElement sg_form(const PolyForm& w);
SmallGElement sg_iota(const PolyVectorField& X);
SmallGElement sg_lie(const PolyVectorField& Y);

/// Coordinates in a finite-dimensional Lie algebra with a fixed basis.
struct LieCoords {
  std::vector<Rational> c;

  bool is_zero() const;
  friend bool operator==(const LieCoords&, const LieCoords&) = default;
};

struct CeElement;  // a formal sum of multilinear maps; see ce.hpp
using CeRef = std::shared_ptr<const CeElement>;

using Value = std::variant<std::monostate, PolyForm, PolyVectorField, SmallGElement,
                           GradedPoly, LieCoords, CeRef>;

/// A graded element: opaque payload plus its cohomological degree. The degree
/// is the total/internal degree of the space the element lives in, never the
/// arity of anything; shifted spaces record the shift in their own degree
/// bookkeeping.
struct Element {
  Value value;
  int degree = 0;

  Element() = default;
  Element(Value v, int d) : value(std::move(v)), degree(d) {}

  bool is_zero() const;
};

Element zero_element();

Element element_add(const Element& a, const Element& b);
Element element_scale(const Rational& c, const Element& a);
Element element_neg(const Element& a);

/// Structural equality (zero-normalized). Not available for CE payloads,
/// whose equality is extensional; spaces of maps override it with a sampled
/// pointwise check.
bool element_equal(const Element& a, const Element& b);

/// Total order used for the canonical argument ordering of skew-symmetrized
/// evaluators. Deterministic across runs; unavailable for CE payloads.
int value_compare(const Value& a, const Value& b);

std::string element_render(const Element& a);

}  // namespace koszul

#endif
