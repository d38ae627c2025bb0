#ifndef KOSZUL_CE_HPP
#define KOSZUL_CE_HPP

#include <vector>

#include "koszul/dgla.hpp"
#include "koszul/multimap.hpp"

namespace koszul {

/// Element of the Chevalley-Eilenberg-type DGLA CE(g,h): a finite sum of
/// multilinear maps g -> h of mixed arity, all of one total degree
/// (arity + degree). Extensional, like the maps it contains: equality is a
/// sampled pointwise check, never structural.
struct CeElement {
  std::vector<MultiMap> comps;  // at most one component per arity
};

CeRef make_ce(std::vector<MultiMap> comps);
CeRef ce_add(const CeRef& a, const CeRef& b);
CeRef ce_scale(const Rational& c, const CeRef& a);
/// Total degree arity + degree, uniform across components.
int ce_total_degree(const CeRef& a);
/// The arity-k component (zero map if absent).
MultiMap ce_component(const CeRef& a, int k, const std::string& dom, const std::string& cod);

// ---- the bidgla structure on Hom(g, h) ----

/// Vertical differential d_(0,1) f = f |> d_g - (-1)^{a+d-1} d_h |> f.
MultiMap ce_vertical(const Dgla& g, const Dgla& h, const MultiMap& f);

/// Horizontal differential d_(1,0) f = f |> [.,.]_g.
MultiMap ce_horizontal(const Dgla& g, const MultiMap& f);

/// [f,q]_Hom = -(-1)^{d1 (a2+d2)} [.,.]_h o (f x q) o P_{a1,a2}.
MultiMap ce_bracket_maps(const Dgla& h, const MultiMap& f, const MultiMap& q);

CeRef ce_differential(const Dgla& g, const Dgla& h, const CeRef& f);
CeRef ce_bracket(const Dgla& g, const Dgla& h, const CeRef& f, const CeRef& q);

/// CE(g,h) packaged as a Dgla over CeRef elements. Equality of elements is
/// pointwise on seeded sample tuples up to `arity_cap`; sampling produces
/// synthetic maps built from h's structure (only available when g and h
/// coincide).
Dgla make_ce_dgla(const Dgla& g, const Dgla& h, int arity_cap, int eq_samples,
                  std::uint64_t eq_seed);

/// Synthetic graded multilinear map g -> g of the given arity, built from
/// brackets and differentials with random sampled coefficients; used to
/// exercise the bidgla axioms.
MultiMap random_ce_map(Rng& rng, const Dgla& g, int arity);

/// Arity-truncated gauge action inside CE(g,h):
///   e^a * f = f + sum_{m >= 0} ad_a^m/(m+1)! ([a,f] - d_ce a),
/// evaluated exactly component-by-component for arities <= K (each ad_a
/// raises arity, so every fixed-arity component is a finite sum).
CeRef ce_gauge_action(const Dgla& g, const Dgla& h, const CeRef& a, const CeRef& f, int K);

}  // namespace koszul

#endif
