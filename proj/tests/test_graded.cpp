#include <doctest.h>

#include "koszul/graded.hpp"
#include "koszul/rng.hpp"

using namespace koszul;

TEST_CASE("koszul_sign basics") {
  // identity on any degrees
  CHECK(koszul_sign({0, 1}, {3, 7}) == 1);
  // swap of two odd symbols: epsilon = -1, signature = -1, total +1
  CHECK(koszul_epsilon({1, 0}, {1, 1}) == -1);
  CHECK(signature({1, 0}) == -1);
  CHECK(koszul_sign({1, 0}, {1, 1}) == 1);
  // swap of odd and even: epsilon = +1, signature = -1
  CHECK(koszul_epsilon({1, 0}, {1, 2}) == 1);
  CHECK(koszul_sign({1, 0}, {1, 2}) == -1);
}

TEST_CASE("koszul_sign rejects malformed input") {
  CHECK_THROWS(koszul_sign({0, 1}, {1}));
  CHECK_THROWS(koszul_sign({0, 0}, {1, 1}));
}

TEST_CASE("koszul_sign is multiplicative under composition") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.next_int(2, 5));
    auto perms = all_permutations(n);
    const auto& s = perms[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(perms.size()) - 1))];
    const auto& t = perms[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(perms.size()) - 1))];
    std::vector<int> degs;
    for (int i = 0; i < n; ++i) degs.push_back(static_cast<int>(rng.next_int(-2, 3)));
    // transport the degree list along s for the second factor
    std::vector<int> degs_s;
    for (int i : s) degs_s.push_back(degs[static_cast<std::size_t>(i)]);
    CHECK(koszul_sign(compose(s, t), degs) == koszul_sign(s, degs) * koszul_sign(t, degs_s));
  }
}

TEST_CASE("unshuffles counts and order") {
  auto u11 = unshuffles(1, 1);
  REQUIRE(u11.size() == 2);
  CHECK(u11[0] == Permutation{0, 1});
  CHECK(u11[1] == Permutation{1, 0});

  CHECK(unshuffles(2, 1).size() == 3);
  auto u03 = unshuffles(0, 3);
  REQUIRE(u03.size() == 1);
  CHECK(u03[0] == Permutation{0, 1, 2});

  // lexicographic order of the first blocks
  auto u22 = unshuffles(2, 2);
  REQUIRE(u22.size() == 6);
  CHECK(u22[0] == Permutation{0, 1, 2, 3});
  CHECK(u22[1] == Permutation{0, 2, 1, 3});
}

TEST_CASE("unshuffles partition the symmetric group by block order") {
  for (int j = 0; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      auto us = unshuffles(j, k);
      // each unshuffle preserves the order inside both blocks, and every
      // permutation with that property appears exactly once
      std::size_t count = 0;
      for (const auto& p : all_permutations(j + k)) {
        bool inc = true;
        for (int i = 0; i + 1 < j; ++i) inc = inc && (p[i] < p[i + 1]);
        for (int i = j; i + 1 < j + k; ++i)
          inc = inc && (p[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i + 1)]);
        if (inc) ++count;
      }
      CHECK(us.size() == count);
      for (std::size_t a = 0; a + 1 < us.size(); ++a) CHECK(us[a] < us[a + 1]);
    }
}

TEST_CASE("ordered unshuffles") {
  // at j = k = 1 only the identity survives
  auto o11 = ordered_unshuffles(1, 1);
  REQUIRE(o11.size() == 1);
  CHECK(o11[0] == Permutation{0, 1});
  // j != k: same as unshuffles
  CHECK(ordered_unshuffles(1, 2).size() == 3);
  // j = k = 2: the half keeping the first slot in the first block
  CHECK(ordered_unshuffles(2, 2).size() == 3);
}

TEST_CASE("signed unshuffles carry koszul_sign") {
  // P_{1,1} on degrees (1,1): both terms sign +1
  auto su = signed_unshuffles(1, 1, {1, 1});
  REQUIRE(su.size() == 2);
  CHECK(su[0].sign == 1);
  CHECK(su[1].sign == 1);
  // P_{2,1} has 3 terms
  CHECK(signed_unshuffles(2, 1, {1, 1, 1}).size() == 3);
}
