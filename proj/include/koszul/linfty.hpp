#ifndef KOSZUL_LINFTY_HPP
#define KOSZUL_LINFTY_HPP

#include <functional>
#include <optional>

#include "koszul/ce.hpp"
#include "koszul/dgla.hpp"

namespace koszul {

/// L-infinity structure: a carrier plus multibrackets mu_k of arity k and
/// degree 2-k whose sum is a Maurer-Cartan element of the Nijenhuis-
/// Richardson algebra (a tested property, see linfty_identity_check).
struct LInftyStructure {
  std::string name;
  Carrier carrier;
  std::vector<MultiMap> brackets;  // brackets[k-1] has arity k
};

/// L-infinity morphism between DGLAs: components Phi_k of arity k and degree
/// 1-k subject to the compatibility identities.
struct LInftyMorphism {
  std::string name;
  Dgla source;
  Dgla target;
  std::vector<MultiMap> components;  // components[k-1] has arity k
};

/// Suspension bookkeeping between a DGLA's negative part and the carrier of
/// its fiber model: carrier degree = algebra degree + 1, payload unchanged.
Element suspend(const Element& e);
Element desuspend(const Element& e);

/// B_0..B_m with the B_1 = -1/2 convention, by the standard recurrence.
std::vector<Rational> bernoulli_numbers(int m);

/// Frozen coefficient of the arity-n derived bracket (n >= 2); the sign
/// convention was selected once by the validation suite (identities, binary
/// match against the Courant formula, small/large agreement) and is pinned
/// by tests.
Rational getzler_coefficient(int n);

using CoefficientFn = std::function<Rational(int)>;

/// A DGLA seen as an L-infinity algebra (mu_1 = d, mu_2 = bracket).
LInftyStructure linfty_from_dgla(const Dgla& g);

/// Getzler derived brackets on the (suspended) negative truncation of g:
/// unary = the truncated differential, n-ary = the Bernoulli-weighted nested
/// brackets, pushed through the suspension adapter into the skew convention.
LInftyStructure getzler_brackets(const Dgla& g, int K);
LInftyStructure getzler_brackets_custom(const Dgla& g, int K, const CoefficientFn& cn);

/// Higher Courant algebra: Getzler brackets of the twisted small model.
LInftyStructure courant_linfty(int n, int r, const PolyForm& sigma, int K);

/// Rogers' observables algebra on Hamiltonian pairs of a closed
/// (r+1)-form: only nontrivial multibrackets are the multicontractions
/// (-1)^{k+1} iota_{x_1}..iota_{x_k} sigma on degree-0 tuples (the binary one
/// pairs that form with [x_1,x_2]).
LInftyStructure rogers_linfty(int n, int r, const PolyForm& sigma, int K);

/// Degree-0 carrier identification (X, alpha) <-> suspended alpha + X_[1].
Element courant_pair_element(const CourantSection& s, int r);
CourantSection courant_section_from(const Element& e, int n);

/// iota_infty sigma: X_ham -> truncated shifted de Rham complex, component k
/// is x_1 x ... x x_k -> -iota_{x_1}...iota_{x_k} sigma.
LInftyMorphism iota_infty(int n, int r, const PolyForm& sigma, int K);

/// Phi: g_r -> g_{r+1} with Phi_1 = (d, id, id) and Phi_2(X_[1], w) =
/// iota_X w (antisymmetric completion included), zero beyond arity 2.
LInftyMorphism phi_morphism(int n, int r, int max_poly_deg = 2);

/// Phi(mu) = sum_k 1/k! Phi_k(mu,...,mu).
Element morphism_mc_image(const LInftyMorphism& Phi, const Element& mu);

/// Twist of a morphism by a Maurer-Cartan element of the source:
/// (Phi_mu)_k = sum_j 1/j! Phi_{j+k}(mu,..,mu,-), target twisted by Phi(mu).
LInftyMorphism twist_morphism(const LInftyMorphism& Phi, const Element& mu);

// ---- identity suites ----

/// NR Maurer-Cartan equation arity-by-arity: sum_{i+j=k+1} mu_i |> mu_j = 0
/// on sampled tuples, for k = 1..K. Exact.
CheckResult linfty_identity_check(const LInftyStructure& L, int K, Rng& rng, int samples);

/// The morphism compatibility identities at arities 1..K, plus (optionally)
/// the cross-check that the direct residual agrees pointwise with the
/// Maurer-Cartan residual computed in CE(g,h) - two independent code paths.
CheckResult morphism_identity_check(const LInftyMorphism& Phi, int K, Rng& rng, int samples,
                                    bool ce_crosscheck = true);

/// The two sides of the arity-k compatibility identity as maps,
///   Phi_k |> d_g + Phi_{k-1} |> [.,.]_g   and   d_h o Phi_k + [.,.]_h o S_{2,k};
/// exposed so suites can evaluate them on hand-picked tuples.
MultiMap morphism_identity_lhs(const LInftyMorphism& Phi, int k);
MultiMap morphism_identity_rhs(const LInftyMorphism& Phi, int k);

/// Sampled restriction test: every component output on inputs from the
/// non-negative part lands in the non-negative part.
CheckResult morphism_restriction_check(const LInftyMorphism& Phi, Rng& rng, int samples);

// ---- constructions tying the models together ----

/// The inclusion g_{r,sigma} -> ghat_{r,sigma} (forms as v-polynomials,
/// iota as p-linear, Lie as P + vp terms).
DglaMorphism make_embedding(int n, int r, const PolyForm& sigma, int max_poly_deg = 2);

/// Getzler brackets computed in the small model, embedded, against the same
/// brackets computed in the big model on embedded tuples.
CheckResult getzler_agreement_check(int n, int r, const PolyForm& sigma, int K, Rng& rng,
                                    int samples);

/// Binary derived bracket against the Courant bracket formula on section
/// pairs.
CheckResult courant_binary_check(int n, int r, const PolyForm& sigma, Rng& rng, int samples);

/// The degree-wise ladder between the twisted and untwisted Courant
/// complexes: chain property plus agreement with the linear component of
/// Phi under the suspension identification. `drop_rung` perturbs the ladder
/// (negative control).
CheckResult courant_chain_map_check(int n, int r, const PolyForm& sigma, Rng& rng, int samples,
                                    bool drop_rung = false);

/// The gauge identity e^iota * L = iota_infty sigma in CE(X_ham, g_{r,sigma}),
/// components 1..r+2, plus the structural sub-identities
/// [iota, L] = 2 iota o [.,.] and [iota, (iota_infty)_k] = (k+1)(iota_infty)_{k+1}.
CheckResult gauge_morphism_check(int n, int r, const PolyForm& sigma, Rng& rng, int samples);

// ---- homotopy comomentum maps ----

struct Comomentum {
  Dgla lie;                               // the acting Lie algebra, degree 0
  std::vector<PolyVectorField> rho;       // rho(e_i), Hamiltonian fields
  std::vector<MultiMap> h;                // h[k-1]: arity k into Omega^{r-k}
};

/// The standard abelian example: K = R^2 acting by coordinate translations,
/// sigma the volume form of the first r+1 coordinates, h_k built from radial
/// primitives. Requires n >= r+1 (and n >= 3 when r = 1).
Comomentum abelian_translation_comomentum(int n, int r, const PolyForm& sigma);

/// Arity-wise check of iota_infty sigma o rho = d_dR * h + h * [.,.]_K;
/// failures report the violated arity. With beta supplied, also verifies the
/// prism top-face decomposition chi_beta(L rho(e)) = rho(e) + Lie_{rho(e)} beta
/// and that rho stays Hamiltonian for sigma + d beta.
CheckResult comomentum_check(int n, int r, const PolyForm& sigma, const Comomentum& data,
                             const std::optional<PolyForm>& beta, Rng& rng, int samples);

}  // namespace koszul

#endif
