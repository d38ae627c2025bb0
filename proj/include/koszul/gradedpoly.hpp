#ifndef KOSZUL_GRADEDPOLY_HPP
#define KOSZUL_GRADEDPOLY_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "koszul/forms.hpp"
#include "koszul/rational.hpp"
#include "koszul/rng.hpp"

namespace koszul {

/// Darboux chart of T*[r]T[1]M over M = R^n: coordinate families
///   x (degree 0), v (degree 1), p (degree r-1), P (degree r),
/// each indexed 0..n-1. Parity, not family, decides commutativity: odd
/// variables square to zero, even ones commute freely.
struct GradedCoordinateSystem {
  int n = 0;
  int r = 0;

  int deg_v() const { return 1; }
  int deg_p() const { return r - 1; }
  int deg_P() const { return r; }
  bool p_odd() const { return ((r - 1) % 2) != 0; }
  bool P_odd() const { return (r % 2) != 0; }

  friend bool operator==(const GradedCoordinateSystem&, const GradedCoordinateSystem&) = default;
};

/// Normal form: x-exponents, then v < p < P with ascending indices inside
/// each family. Odd families are strict index sets; even ones may repeat.
struct GradedMonomial {
  MultiIndex x;        // length n
  std::vector<int> v;  // strictly increasing
  std::vector<int> p;  // non-decreasing; strictly increasing when p is odd
  std::vector<int> P;  // non-decreasing; strictly increasing when P is odd

  friend auto operator<=>(const GradedMonomial&, const GradedMonomial&) = default;
};

/// Element of the shifted algebra C(T*[r]T[1]M)[r], possibly inhomogeneous.
/// Degrees reported by this type are post-shift: degree(m) = raw - r, so a
/// closed (r+1)-form pulls back to a degree-one element.
struct GradedPoly {
  GradedCoordinateSystem sys;
  std::map<GradedMonomial, Rational> terms;

  GradedPoly() = default;
  explicit GradedPoly(const GradedCoordinateSystem& s) : sys(s) {}

  bool is_zero() const { return terms.empty(); }
  void add_term(const GradedMonomial& m, const Rational& c);
  bool is_homogeneous() const;
  /// Shifted degree of a homogeneous nonzero element.
  int degree() const;
};

/// Unshifted (raw) monomial degree.
int raw_degree(const GradedMonomial& m, const GradedCoordinateSystem& sys);
/// Shifted degree raw - r.
int shifted_degree(const GradedMonomial& m, const GradedCoordinateSystem& sys);

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
GradedPoly operator*(const Rational& c, const GradedPoly& a);
GradedPoly operator-(const GradedPoly& a);
bool operator==(const GradedPoly& a, const GradedPoly& b);

/// Graded product with Koszul normal ordering.
GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

GradedPoly gp_one(const GradedCoordinateSystem& sys);
GradedPoly gp_var_x(const GradedCoordinateSystem& sys, int i);
GradedPoly gp_var_v(const GradedCoordinateSystem& sys, int i);
GradedPoly gp_var_p(const GradedCoordinateSystem& sys, int i);
GradedPoly gp_var_P(const GradedCoordinateSystem& sys, int i);

/// The shifted Poisson bracket, determined by the Darboux relations
///   {x^i, P_j} = delta^i_j = -{P_j, x^i},
///   {v^i, p_j} = delta^i_j = -(-1)^{r-1} {p_j, v^i},
/// extended as a biderivation by the graded Leibniz rule. On shifted degrees
/// it is a degree-0 Lie bracket; its antisymmetry in the shifted grading is
/// the governing sign rule (it reproduces the relations above).
GradedPoly poisson_bracket(const GradedPoly& f, const GradedPoly& g);

/// S = sum_i v^i P_i, the canonical Maurer-Cartan element lifting d_dR.
GradedPoly canonical_S(const GradedCoordinateSystem& sys);

/// Injective algebra map Omega(M) -> C(T*[r]T[1]M)[r]: x^i -> x^i,
/// dx^i -> v^i.
GradedPoly pullback_form(const PolyForm& w, const GradedCoordinateSystem& sys);

/// Model of a homogeneous element of g_r = Cartan x Omega[r] inside the big
/// algebra: forms as v-polynomials, iota_X as X^i(x) p_i, and Lie_Y as
/// Y^i(x) P_i + dY^i/dx^j v^j p_i. (Element-level plumbing sits on top of
/// this in the DGLA layer.)
GradedPoly embed_iota(const PolyVectorField& X, const GradedCoordinateSystem& sys);
GradedPoly embed_lie(const PolyVectorField& Y, const GradedCoordinateSystem& sys);

/// All normal monomials of the given shifted degree within the stated
/// exponent bounds (x total degree <= x_deg; each odd family a subset, each
/// even family with at most `fiber_bound` factors).
std::vector<GradedMonomial> monomials_of_degree(const GradedCoordinateSystem& sys,
                                                int shifted_deg, int x_deg, int fiber_bound);

GradedPoly random_graded_poly(Rng& rng, const GradedCoordinateSystem& sys, int shifted_deg,
                              int x_deg, int max_terms = 2);

std::string render(const GradedPoly& f);

/// Report for the negative-part comparison between the small and big models;
/// `missing` lists monomials of Courant-relevant negative degrees that fail
/// to lie in the image of the embedding (expected empty).
struct SourceCheckReport {
  bool injective_on_samples = true;
  std::vector<GradedMonomial> missing;
  int checks_run = 0;
  bool passed() const { return injective_on_samples && missing.empty(); }
};

SourceCheckReport source_check(const GradedCoordinateSystem& sys, Rng& rng, int samples);

}  // namespace koszul

#endif
