#include "koszul/graded.hpp"

#include <algorithm>
#include <numeric>

#include "koszul/errors.hpp"

namespace koszul {

Permutation identity_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw InvalidInput("compose: size mismatch");
  Permutation r(s.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = s[static_cast<std::size_t>(t[i])];
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

int signature(const Permutation& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

int koszul_epsilon(const Permutation& perm, const std::vector<int>& degrees) {
  if (perm.size() != degrees.size()) throw InvalidInput("koszul_epsilon: length mismatch");
  if (!is_permutation(perm)) throw InvalidInput("koszul_epsilon: not a permutation");
  int odd_crossings = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) {
        const int da = degrees[static_cast<std::size_t>(perm[a])];
        const int db = degrees[static_cast<std::size_t>(perm[b])];
        if ((da % 2 != 0) && (db % 2 != 0)) ++odd_crossings;
      }
  return (odd_crossings % 2 == 0) ? 1 : -1;
}

int koszul_sign(const Permutation& perm, const std::vector<int>& degrees) {
  return signature(perm) * koszul_epsilon(perm, degrees);
}

std::vector<Permutation> unshuffles(int j, int k) {
  if (j < 0 || k < 0 || j + k < 1) throw InvalidInput("unshuffles: need j+k >= 1");
  const int n = j + k;
  std::vector<Permutation> out;
  // Enumerate j-subsets of {0..n-1} in lexicographic order; the subset is the
  // first block, its complement the second.
  std::vector<int> idx(static_cast<std::size_t>(j));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Permutation p;
    p.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int v : idx) {
      p.push_back(v);
      used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)]) p.push_back(v);
    out.push_back(std::move(p));
    // next j-subset
    int i = j - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - j + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < j; ++t)
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

std::vector<Permutation> ordered_unshuffles(int j, int k) {
  auto all = unshuffles(j, k);
  if (j != k) return all;
  std::vector<Permutation> out;
  for (auto& p : all)
    if (p[0] < p[static_cast<std::size_t>(j)]) out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p = identity_perm(n);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SignedPermutation> signed_unshuffles(int j, int k,
                                                 const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != j + k)
    throw InvalidInput("signed_unshuffles: degree list has wrong length");
  std::vector<SignedPermutation> out;
  for (auto& p : unshuffles(j, k)) {
    int s = koszul_sign(p, degrees);
    out.push_back({std::move(p), s});
  }
  return out;
}

}  // namespace koszul
