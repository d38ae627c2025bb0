#ifndef KOSZUL_DGLA_HPP
#define KOSZUL_DGLA_HPP

#include <functional>
#include <string>
#include <vector>

#include "koszul/check.hpp"
#include "koszul/courant.hpp"
#include "koszul/multimap.hpp"
#include "koszul/rng.hpp"

namespace koszul {

/// A graded vector space we can sample from and compare in. Equality and
/// zero-testing default to the structural element operations; spaces of maps
/// override them with sampled pointwise comparison.
struct Carrier {
  std::string tag;
  std::vector<int> degrees;
  std::function<Element(Rng&, int)> sample;
  std::function<bool(const Element&, const Element&)> equal;
  std::function<bool(const Element&)> is_zero;
  std::function<std::string(const Element&)> render;

  static Carrier basic(std::string tag, std::vector<int> degrees,
                       std::function<Element(Rng&, int)> sample);
};

/// Differential graded Lie algebra as a stateless evaluator bundle: a
/// degree-1 differential and a degree-0 bracket over a carrier. d^2 = 0,
/// the derivation law, antisymmetry and Jacobi are enforced by the axiom
/// suite on samples, not assumed.
struct Dgla {
  std::string name;
  Carrier carrier;
  MultiMap diff;     // MultiMap(1, 1)
  MultiMap bracket;  // MultiMap(2, 0)
};

/// Strict DGLA morphism.
struct DglaMorphism {
  std::string name;
  Dgla source;
  Dgla target;
  std::function<Element(const Element&)> map;
};

// ---- concrete algebras ----

/// Element of g_r with its internal degree computed from r; throws on
/// inconsistent slots (iota lives at -1, lie at 0, a form of form-degree k
/// at k - r).
Element smallg_element(const SmallGElement& v, int r);
/// The form w sitting in the form slot of g_r.
Element smallg_form_element(const PolyForm& w, int r);
/// The form w as an element of Omega[r] itself (tau-type carriers).
Element form_element(const PolyForm& w, int r);
Element field_element(const PolyVectorField& X);  // degree 0
Element gradedpoly_element(const GradedPoly& f);

/// The Cartan algebra: X[1] + X with d the shifted identity, brackets the
/// commutator table of iota/Lie operators.
Dgla make_cartan(int n, int max_poly_deg = 2);

/// g_r = Cartan x Omega[r].
Dgla make_small_g(int n, int r, int max_poly_deg = 2);

/// The big model C(T*[r]T[1]M)[r] with d = {S,-} and the shifted Poisson
/// bracket.
Dgla make_large_g(int n, int r, int max_poly_deg = 2);

/// Hamiltonian vector fields of a closed form, concentrated in degree 0;
/// sampling draws rational combinations of an exact nullspace basis of
/// Lie_X sigma = 0.
Dgla make_hamiltonian_fields(int n, const PolyForm& sigma, int max_poly_deg = 2);

/// Canonical truncation of the shifted de Rham complex: Omega^j in degree
/// j - r for j < r, exact r-forms in degree 0; abelian.
Dgla make_truncated_de_rham(int n, int r, int max_poly_deg = 2);

/// Finite-dimensional Lie algebra with structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k, in degree 0.
Dgla make_lie_algebra(std::string name, std::vector<std::vector<std::vector<Rational>>> constants);

// ---- operations ----

/// d(alpha) + (1/2)[alpha, alpha] == 0, exactly. alpha must be degree 1.
bool mc_check(const Dgla& g, const Element& alpha);

/// Twisted algebra with d_sigma = d + [sigma, -]; requires mc_check(sigma).
Dgla twist(const Dgla& g, const Element& sigma);

/// Sub-DGLA on degrees >= 0 (closure under d and bracket is a tested
/// property, not an assumption).
Dgla truncate_nonneg(const Dgla& g);

/// Gauge action e^a * x = x + sum_{n>=0} ad_a^n / (n+1)! ([a,x] - d a).
/// Detects nilpotency dynamically; throws UnsupportedInput when the adjoint
/// series is still nonzero after `cap` iterations.
Element gauge_action(const Dgla& g, const Element& a, const Element& x, int cap = 32);

/// chi_beta: g_{r,sigma} -> g_{r,sigma+d beta},
///   omega + X_[1] + Y |-> omega + X_[1] + iota_X beta + Y + Lie_Y beta.
DglaMorphism chi_beta(int n, int r, const PolyForm& beta, const PolyForm& sigma,
                      int max_poly_deg = 2);

// ---- verification ----

/// d^2 = 0, derivation rule, graded antisymmetry, graded Jacobi, each on
/// `samples` tuples per degree combination. Exact equality.
CheckResult dgla_axiom_check(const Dgla& g, Rng& rng, int samples);

/// Intertwining of differentials and brackets on samples.
CheckResult dgla_morphism_check(const DglaMorphism& mor, Rng& rng, int samples);

}  // namespace koszul

#endif
