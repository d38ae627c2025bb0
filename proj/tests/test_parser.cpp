#include <doctest.h>

#include "koszul/errors.hpp"
#include "koszul/parser.hpp"

using namespace koszul;

TEST_CASE("form grammar") {
  // volume form
  PolyForm vol = parse_form("dx1^dx2^dx3", 3);
  CHECK(vol == PolyForm::basis(3, {0, 1, 2}));
  // coefficient and monomial
  PolyForm w = parse_form("2/3*x1*dx2", 3);
  CHECK(render(w) == "2/3*x1*dx2");
  // nilpotence normalizes to zero
  CHECK(parse_form("dx1^dx1", 3).is_zero());
  // out-of-order wedge picks up the sign
  CHECK(parse_form("dx2^dx1", 3) == parse_form("-1*dx1^dx2", 3));
  // powers
  CHECK(parse_form("x1**2*dx3", 3) == parse_form("x1*x1*dx3", 3));
  // scalars are 0-forms
  CHECK(render(parse_form("1", 3)) == "1");
  CHECK(parse_form("0", 3).is_zero());
}

TEST_CASE("field grammar") {
  CHECK(parse_field("d1", 3) == PolyVectorField::basis(3, 0));
  CHECK(render(parse_field("x2*d1", 3)) == "x2*d1");
  PolyVectorField f = parse_field("d1 + -1*x1*d2", 3);
  CHECK(render(f) == "d1 + -1*x1*d2");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_form("dx1^^dx2", 3), ParseError);
  CHECK_THROWS_AS(parse_form("dx5", 3), ParseError);  // index out of range
  CHECK_THROWS_AS(parse_form("", 3), ParseError);
  CHECK_THROWS_AS(parse_form("x1 x2", 3), ParseError);  // missing '*'
  CHECK_THROWS_AS(parse_field("dx1", 3), ParseError);   // forms are not fields
  try {
    parse_form("dx1 + @", 3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos >= 6);
  }
}

TEST_CASE("render round-trips through the parser") {
  Rng rng(31);
  for (int s = 0; s < 200; ++s) {
    int n = static_cast<int>(rng.next_int(1, 4));
    int k = static_cast<int>(rng.next_int(0, n));
    PolyForm w = random_form(rng, n, k, 3);
    CHECK(parse_form(render(w), n) == w);
    PolyVectorField X = random_field(rng, n, 3);
    CHECK(parse_field(render(X), n) == X);
  }
}
