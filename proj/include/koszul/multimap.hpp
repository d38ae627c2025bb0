#ifndef KOSZUL_MULTIMAP_HPP
#define KOSZUL_MULTIMAP_HPP

#include <functional>
#include <string>
#include <vector>

#include "koszul/element.hpp"
#include "koszul/graded.hpp"

namespace koszul {

/// Graded skew-symmetric multilinear map, represented extensionally: arity,
/// degree, and an evaluator. The output degree of an evaluation is always
/// sum of input degrees + degree. Domain/codomain tags identify the spaces
/// for composition checks.
class MultiMap {
 public:
  using Evaluator = std::function<Element(const std::vector<Element>&)>;

  MultiMap() = default;

  /// Wraps a raw evaluator so that evaluation pre-sorts the arguments into a
  /// canonical order and applies the Koszul sign of the sorting permutation;
  /// tuples with a repeated even-degree argument evaluate to zero. The result
  /// is graded skew-symmetric no matter what `raw` does on sorted input.
  static MultiMap make(int arity, int degree, std::string domain, std::string codomain,
                       Evaluator raw);

  /// Trusts `eval` to be graded skew-symmetric already (used for maps that
  /// are skew by construction, e.g. Nijenhuis-Richardson composites, and for
  /// spaces whose payloads have no canonical order).
  static MultiMap make_skew(int arity, int degree, std::string domain, std::string codomain,
                            Evaluator eval);

  static MultiMap zero(int arity, int degree, std::string domain, std::string codomain);

  Element operator()(const std::vector<Element>& args) const;

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const std::string& domain() const { return domain_; }
  const std::string& codomain() const { return codomain_; }
  /// Degree in the Nijenhuis-Richardson grading, arity + degree - 1.
  int nr_degree() const { return arity_ + degree_ - 1; }

 private:
  int arity_ = 1;
  int degree_ = 0;
  std::string domain_, codomain_;
  Evaluator eval_;
};

MultiMap mm_add(const MultiMap& a, const MultiMap& b);
MultiMap mm_scale(const Rational& c, const MultiMap& a);
MultiMap mm_neg(const MultiMap& a);

/// All signed unshuffle rearrangements of `args`: each entry carries the
/// Koszul sign of its permutation against the argument degrees.
struct UnshuffleTerm {
  SignedPermutation sp;
  std::vector<Element> args;
};
std::vector<UnshuffleTerm> unshuffle_apply(int j, int k, const std::vector<Element>& args);
/// Ordered variant P^<: only unshuffles keeping the first argument in the
/// first block when j == k (identity-only at j == k == 1).
std::vector<UnshuffleTerm> unshuffle_apply_ordered(int j, int k, const std::vector<Element>& args);

/// Nijenhuis-Richardson product
///   mu |> nu = (-1)^{(a1-1) d2} mu o (nu x 1_{a1-1}) o P_{a2, a1-1},
/// arity a1+a2-1, degree d1+d2. Requires nu's codomain to match mu's domain
/// (and, beyond arity-1 mu, a common domain).
MultiMap nr_product(const MultiMap& mu, const MultiMap& nu);

/// [mu, nu] = mu|>nu - (-1)^{nr(mu) nr(nu)} nu|>mu on one space.
MultiMap nr_bracket(const MultiMap& mu, const MultiMap& nu);

/// (mu_a |> mu_b) |> mu_c - mu_a |> (mu_b |> mu_c).
MultiMap nr_associator(const MultiMap& a, const MultiMap& b, const MultiMap& c);

/// The closed form of the associator,
///   (-1)^s mu_a o ((mu_b x mu_c o P_{b,c}) x 1_{a-2}) o P_{b+c, a-2},
/// s = deg(c)(b+a) + deg(b)(a-1) + b(c+1); equals nr_associator pointwise.
MultiMap nr_associator_closed(const MultiMap& a, const MultiMap& b, const MultiMap& c);

}  // namespace koszul

#endif
