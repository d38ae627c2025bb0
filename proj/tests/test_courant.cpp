#include <doctest.h>

#include "koszul/courant.hpp"
#include "koszul/errors.hpp"
#include "koszul/parser.hpp"

using namespace koszul;

namespace {
PolyForm f(const std::string& s, int n = 3) { return parse_form(s, n); }
PolyVectorField v(const std::string& s, int n = 3) { return parse_field(s, n); }
}  // namespace

TEST_CASE("pairings") {
  // <(d1, dx2^dx3), (d2, 0)>_- = (1/2)(iota_{d1} 0 - iota_{d2}(dx2^dx3)) = -1/2 dx3
  CourantSection s1{v("d1"), f("dx2^dx3")};
  CourantSection s2{v("d2"), f("0")};
  CHECK(pairing(s1, s2, PairingKind::minus) == f("-1/2*dx3"));
  // <s, s>_- = 0
  CHECK(pairing(s1, s1, PairingKind::minus).is_zero());
  // pairing against the zero section vanishes
  CourantSection z{v("0"), f("0")};
  CHECK(pairing(s1, z, PairingKind::plus).is_zero());
  CHECK(pairing(s1, z, PairingKind::minus).is_zero());
}

TEST_CASE("courant bracket examples") {
  PolyForm vol = f("dx1^dx2^dx3");
  // r = 1 sections (1-forms), sigma the volume
  CourantSection a{v("d1"), f("0")};
  CourantSection b{v("d2"), f("0")};
  CourantSection got = courant_bracket(a, b, vol);
  CHECK(got.vf.is_zero());
  CHECK(got.form == f("-1*dx3"));  // iota_{d1} iota_{d2} vol

  // sigma = 0, constant data: everything vanishes
  CourantSection c{v("d1"), f("dx2")};
  CourantSection d{v("d3"), f("dx1")};
  CourantSection r0 = courant_bracket(c, d, f("0"));
  CHECK(r0.vf.is_zero());
  CHECK(r0.form.is_zero());

  CHECK_THROWS_AS(courant_bracket(a, b, f("x1*dx2^dx3")), InvalidInput);  // sigma not closed
}

TEST_CASE("two expansions of the bracket agree") {
  Rng rng(21);
  int agreed = 0;
  for (int s = 0; s < 50; ++s) {
    int r = static_cast<int>(rng.next_int(1, 2));
    PolyForm sigma = random_closed_form(rng, 3, r + 2, 2);
    CourantSection s1{random_field(rng, 3, 2), random_form(rng, 3, r, 2)};
    CourantSection s2{random_field(rng, 3, 2), random_form(rng, 3, r, 2)};
    CourantSection x = courant_bracket(s1, s2, sigma);
    CourantSection y = courant_bracket_alt(s1, s2, sigma);
    CHECK(x.vf == y.vf);
    CHECK(x.form == y.form);
    ++agreed;
  }
  CHECK(agreed == 50);
}

TEST_CASE("sigma = 0, r = 1 reproduces the Dorfman-style expansion") {
  Rng rng(22);
  PolyForm zero3 = f("0");
  for (int s = 0; s < 30; ++s) {
    CourantSection s1{random_field(rng, 3, 2), random_form(rng, 3, 1, 2)};
    CourantSection s2{random_field(rng, 3, 2), random_form(rng, 3, 1, 2)};
    CourantSection got = courant_bracket(s1, s2, zero3);
    // d<,>_- + iota_1 d a2 - iota_2 d a1
    PolyForm dorfman = de_rham(pairing(s1, s2, PairingKind::minus)) +
                       contract(s1.vf, de_rham(s2.form)) - contract(s2.vf, de_rham(s1.form));
    CHECK(got.form == dorfman);
  }
}

TEST_CASE("hamiltonian_check") {
  PolyForm vol = f("dx1^dx2^dx3");
  // iota_{d3} vol = dx1^dx2 and d(-x1 dx2) = -dx1^dx2
  CHECK(hamiltonian_check(v("d3"), f("-1*x1*dx2"), vol));
  // X = 0 with a closed alpha
  CHECK(hamiltonian_check(v("0"), f("dx1"), vol));
  // iota_{d1} vol = dx2^dx3 is not zero
  CHECK(!hamiltonian_check(v("d1"), f("0"), vol));
}

TEST_CASE("hamiltonian pairs close under the field bracket") {
  Rng rng(23);
  PolyForm vol = f("dx1^dx2^dx3");
  auto basis = hamiltonian_field_basis(vol, 2);
  REQUIRE(!basis.empty());
  for (int s = 0; s < 30; ++s) {
    const auto& X = basis[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(basis.size()) - 1))];
    const auto& Y = basis[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(basis.size()) - 1))];
    // iota_{[X,Y]} sigma = Lie_X (iota_Y sigma) - iota_Y (Lie_X sigma), and the
    // right side is exact with primitive Lie_X alpha_Y when Lie_X sigma = 0
    PolyForm lhs = contract(vf_bracket(X, Y), vol);
    PolyForm rhs = lie_derivative(X, contract(Y, vol)) - contract(Y, lie_derivative(X, vol));
    CHECK(lhs == rhs);
    PolyForm iy = contract(Y, vol);
    PolyForm alpha_y = iy.is_zero() ? PolyForm(3) : -primitive(iy);
    CHECK(hamiltonian_check(vf_bracket(X, Y), lie_derivative(X, alpha_y), vol));
  }
}
