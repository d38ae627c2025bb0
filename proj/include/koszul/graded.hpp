#ifndef KOSZUL_GRADED_HPP
#define KOSZUL_GRADED_HPP

#include <vector>

namespace koszul {

/// Permutations are stored in selection form, 0-based: applying `perm` to a
/// tuple (x_0, ..., x_{n-1}) yields (x_{perm[0]}, ..., x_{perm[n-1]}).
using Permutation = std::vector<int>;

Permutation identity_perm(int n);

/// Composition in the tuple-action sense: apply(compose(s, t), x) ==
/// apply(t, apply(s, x)), i.e. compose(s, t)[i] = s[t[i]].
Permutation compose(const Permutation& s, const Permutation& t);

bool is_permutation(const Permutation& p);

/// (-1)^{#inversions}.
int signature(const Permutation& p);

/// Koszul factor only: product of (-1)^{d_a d_b} over each pair of graded
/// symbols that crosses when reordering (x_0,...) into (x_{perm[0]}, ...).
/// `degrees` are the degrees of the original tuple.
int koszul_epsilon(const Permutation& perm, const std::vector<int>& degrees);

/// Signature times Koszul factor, the sign a graded skew-symmetric map picks
/// up under `perm`. Throws InvalidInput on length mismatch.
int koszul_sign(const Permutation& perm, const std::vector<int>& degrees);

/// All (j,k)-unshuffles of {0..j+k-1}: increasing on the first j and on the
/// last k output slots. Deterministic lexicographic order; count = C(j+k, j).
std::vector<Permutation> unshuffles(int j, int k);

/// Ordered variant: when j == k, only unshuffles with perm[0] < perm[j]
/// (slot 0 stays in the first block). Coincides with unshuffles otherwise,
/// and with the identity-only list at j == k == 1.
std::vector<Permutation> ordered_unshuffles(int j, int k);

/// All n! permutations of {0..n-1}, lexicographic.
std::vector<Permutation> all_permutations(int n);

struct SignedPermutation {
  Permutation perm;
  int sign;  // koszul_sign(perm, degrees) against the degrees supplied
};

/// Every (j,k)-unshuffle paired with its sign against `degrees`.
std::vector<SignedPermutation> signed_unshuffles(int j, int k,
                                                 const std::vector<int>& degrees);

}  // namespace koszul

#endif
