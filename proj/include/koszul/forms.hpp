#ifndef KOSZUL_FORMS_HPP
#define KOSZUL_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/rational.hpp"
#include "koszul/rng.hpp"

namespace koszul {

/// Exponent multi-index of length n.
using MultiIndex = std::vector<int>;

/// Polynomial with exact rational coefficients on R^n; the model of C^inf(M)
/// restricted to polynomials. No zero coefficients are ever stored.
struct PolyScalar {
  int n = 0;
  std::map<MultiIndex, Rational> terms;

  PolyScalar() = default;
  explicit PolyScalar(int dim) : n(dim) {}
  static PolyScalar constant(int dim, const Rational& c);
  static PolyScalar variable(int dim, int i);  // x_i, 0-based

  bool is_zero() const { return terms.empty(); }
  void add_term(const MultiIndex& m, const Rational& c);
  int total_degree() const;  // max total degree, -1 for 0
  Rational eval(const std::vector<Rational>& x) const;
};

PolyScalar operator+(const PolyScalar& a, const PolyScalar& b);
PolyScalar operator-(const PolyScalar& a, const PolyScalar& b);
PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
PolyScalar operator*(const Rational& c, const PolyScalar& a);
PolyScalar operator-(const PolyScalar& a);
bool operator==(const PolyScalar& a, const PolyScalar& b);

/// d/dx_i.
PolyScalar derivative(const PolyScalar& f, int i);

/// Differential form on R^n with PolyScalar coefficients. Keys are strictly
/// increasing index subsets of {0..n-1}; the empty subset is the 0-form part.
struct PolyForm {
  int n = 0;
  std::map<std::vector<int>, PolyScalar> terms;

  PolyForm() = default;
  explicit PolyForm(int dim) : n(dim) {}
  static PolyForm zero(int dim) { return PolyForm(dim); }
  static PolyForm scalar(int dim, const Rational& c);
  static PolyForm from_scalar(const PolyScalar& f);
  /// Basis form dx_{i1} ^ ... ^ dx_{ik} (0-based, must be strictly increasing).
  static PolyForm basis(int dim, const std::vector<int>& idx);

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& idx, const PolyScalar& c);
  bool is_homogeneous() const;           // all terms of equal |I|
  std::optional<int> form_degree() const;  // |I| if homogeneous and nonzero
  /// The form-degree-k part.
  PolyForm component(int k) const;
  int max_form_degree() const;  // -1 for zero
};

PolyForm operator+(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a, const PolyForm& b);
PolyForm operator*(const Rational& c, const PolyForm& a);
PolyForm operator-(const PolyForm& a);
bool operator==(const PolyForm& a, const PolyForm& b);

/// Vector field with PolyScalar components.
struct PolyVectorField {
  int n = 0;
  std::vector<PolyScalar> comp;

  PolyVectorField() = default;
  explicit PolyVectorField(int dim) : n(dim), comp(static_cast<std::size_t>(dim), PolyScalar(dim)) {}
  /// Coordinate field d/dx_i.
  static PolyVectorField basis(int dim, int i);
  /// Euler field sum_i x_i d/dx_i.
  static PolyVectorField euler(int dim);

  bool is_zero() const;
};

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator*(const Rational& c, const PolyVectorField& a);
PolyVectorField operator-(const PolyVectorField& a);
bool operator==(const PolyVectorField& a, const PolyVectorField& b);

// ---- Cartan calculus ----

/// Exterior product; graded-commutative, merges index subsets with the
/// transposition sign. Throws InvalidInput on dimension mismatch.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// de Rham differential.
PolyForm de_rham(const PolyForm& w);

/// Interior product iota_X, a degree -1 derivation of the wedge.
PolyForm contract(const PolyVectorField& X, const PolyForm& w);

/// Lie derivative, computed by the Cartan magic formula d iota + iota d.
PolyForm lie_derivative(const PolyVectorField& X, const PolyForm& w);

/// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i.
PolyVectorField vf_bracket(const PolyVectorField& X, const PolyVectorField& Y);

/// X acting on a scalar.
PolyScalar apply_field(const PolyVectorField& X, const PolyScalar& f);

bool is_closed(const PolyForm& w);

/// A primitive of a closed form of form-degree >= 1, via the radial homotopy
/// operator: exact on polynomial coefficients. Throws InvalidInput if w is
/// not closed or has a 0-form component.
PolyForm primitive(const PolyForm& w);

// ---- sampling ----

PolyScalar random_scalar(Rng& rng, int n, int max_deg, int max_terms = 3);
PolyForm random_form(Rng& rng, int n, int form_degree, int max_deg, int max_terms = 3);
PolyVectorField random_field(Rng& rng, int n, int max_deg);
/// Closed form of the given degree (d of a random one, plus constants).
PolyForm random_closed_form(Rng& rng, int n, int form_degree, int max_deg);

/// Fixed adversarial elements mixed into samplers: constants, the volume
/// form, x_i-weighted monomials.
std::vector<PolyForm> adversarial_forms(int n, int form_degree);

/// Basis of { X : Lie_X sigma = 0 } among fields of polynomial degree
/// <= max_deg, by exact nullspace computation. On R^n with polynomial
/// coefficients this is exactly the space of Hamiltonian fields of sigma.
std::vector<PolyVectorField> hamiltonian_field_basis(const PolyForm& sigma, int max_deg);

/// Generic-point rank of X -> iota_X sigma; n means nondegenerate. Reported,
/// never gated on.
int contraction_rank(const PolyForm& sigma, Rng& rng);

// ---- canonical text rendering (grammar of the CLI parser) ----

std::string render(const Rational& q);
std::string render(const PolyScalar& f);
std::string render(const PolyForm& w);
std::string render(const PolyVectorField& X);

}  // namespace koszul

#endif
