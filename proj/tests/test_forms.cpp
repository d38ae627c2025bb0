#include <doctest.h>

#include "koszul/errors.hpp"
#include "koszul/forms.hpp"
#include "koszul/parser.hpp"

using namespace koszul;

namespace {
PolyForm f(const std::string& s, int n = 3) { return parse_form(s, n); }
PolyVectorField v(const std::string& s, int n = 3) { return parse_field(s, n); }
}  // namespace

TEST_CASE("wedge") {
  CHECK(wedge(f("dx1"), f("dx2")) == f("dx1^dx2"));
  CHECK(wedge(f("dx1"), f("dx1")).is_zero());
  CHECK(wedge(f("x1*dx2"), f("dx3")) == f("x1*dx2^dx3"));
  // graded commutativity on 1-forms: anticommute
  CHECK(wedge(f("dx2"), f("dx1")) == f("-1*dx1^dx2"));
  // associativity spot check
  CHECK(wedge(wedge(f("dx1"), f("dx2")), f("dx3")) == wedge(f("dx1"), wedge(f("dx2"), f("dx3"))));
  CHECK_THROWS_AS(wedge(f("dx1", 2), f("dx1", 3)), InvalidInput);
}

TEST_CASE("de_rham") {
  CHECK(de_rham(f("x1*dx2")) == f("dx1^dx2"));
  CHECK(de_rham(f("dx1")).is_zero());
  CHECK(de_rham(f("x1*x2*dx3")) == f("x2*dx1^dx3 + x1*dx2^dx3"));
  // Leibniz over wedge on samples
  Rng rng(3);
  for (int s = 0; s < 30; ++s) {
    int ka = static_cast<int>(rng.next_int(0, 2));
    int kb = static_cast<int>(rng.next_int(0, 2));
    PolyForm a = random_form(rng, 3, ka, 2);
    PolyForm b = random_form(rng, 3, kb, 2);
    PolyForm rhs = wedge(de_rham(a), b);
    PolyForm second = wedge(a, de_rham(b));
    rhs = (ka % 2 != 0) ? rhs - second : rhs + second;
    CHECK(de_rham(wedge(a, b)) == rhs);
  }
}

TEST_CASE("contract") {
  CHECK(contract(v("d1"), f("dx1^dx2")) == f("dx2"));
  CHECK(contract(v("d2"), f("dx1^dx2")) == f("-1*dx1"));
  CHECK(contract(v("d1"), contract(v("d2"), f("dx1^dx2^dx3"))) == f("-1*dx3"));
}

TEST_CASE("lie_derivative") {
  CHECK(lie_derivative(v("d1"), f("x1*dx2")) == f("dx2"));
  CHECK(lie_derivative(v("d1"), f("dx1^dx2^dx3")).is_zero());
  CHECK(lie_derivative(v("x1*d1"), f("dx1")) == f("dx1"));
}

TEST_CASE("vf_bracket") {
  CHECK(vf_bracket(v("d1"), v("d2")).is_zero());
  CHECK(vf_bracket(v("d1"), v("x1*d2")) == v("d2"));
  CHECK(vf_bracket(v("x1*d2"), v("x2*d1")) == v("x1*d1") + v("-1*x2*d2"));
  // Jacobi on samples
  Rng rng(4);
  for (int s = 0; s < 40; ++s) {
    PolyVectorField X = random_field(rng, 3, 2);
    PolyVectorField Y = random_field(rng, 3, 2);
    PolyVectorField Z = random_field(rng, 3, 2);
    PolyVectorField lhs = vf_bracket(X, vf_bracket(Y, Z));
    PolyVectorField rhs = vf_bracket(vf_bracket(X, Y), Z) + vf_bracket(Y, vf_bracket(X, Z));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("six Cartan identities across dimensions") {
  for (int n : {2, 3, 4}) {
    Rng rng(100 + static_cast<unsigned>(n));
    for (int s = 0; s < 100; ++s) {
      PolyVectorField X = random_field(rng, n, 2);
      PolyVectorField Y = random_field(rng, n, 2);
      PolyForm w = random_form(rng, n, static_cast<int>(rng.next_int(0, n)), 2);
      CHECK(de_rham(de_rham(w)).is_zero());
      CHECK(lie_derivative(X, de_rham(w)) == de_rham(lie_derivative(X, w)));
      CHECK(de_rham(contract(X, w)) + contract(X, de_rham(w)) == lie_derivative(X, w));
      CHECK(lie_derivative(X, lie_derivative(Y, w)) - lie_derivative(Y, lie_derivative(X, w)) ==
            lie_derivative(vf_bracket(X, Y), w));
      CHECK(lie_derivative(X, contract(Y, w)) - contract(Y, lie_derivative(X, w)) ==
            contract(vf_bracket(X, Y), w));
      CHECK((contract(X, contract(Y, w)) + contract(Y, contract(X, w))).is_zero());
    }
  }
}

TEST_CASE("primitive inverts de_rham on closed forms") {
  Rng rng(9);
  for (int s = 0; s < 40; ++s) {
    int n = static_cast<int>(rng.next_int(2, 4));
    int k = static_cast<int>(rng.next_int(1, n));
    PolyForm w = de_rham(random_form(rng, n, k - 1, 2));
    if (w.is_zero()) continue;
    CHECK(de_rham(primitive(w)) == w);
  }
  CHECK_THROWS_AS(primitive(f("x1*dx2")), InvalidInput);  // not closed
}

TEST_CASE("hamiltonian field basis solves Lie_X sigma = 0") {
  PolyForm vol = f("dx1^dx2^dx3");
  auto basis = hamiltonian_field_basis(vol, 1);
  CHECK(basis.size() >= 6);  // constant fields + linear divergence-free ones
  for (const auto& X : basis) CHECK(lie_derivative(X, vol).is_zero());

  PolyForm sigma = f("dx1^dx2^dx3 + 2*x1*dx1^dx2^dx3");
  for (const auto& X : hamiltonian_field_basis(sigma, 2))
    CHECK(lie_derivative(X, sigma).is_zero());
}

TEST_CASE("contraction rank reporting") {
  Rng rng(11);
  CHECK(contraction_rank(f("dx1^dx2^dx3"), rng) == 3);   // volume form: nondegenerate
  CHECK(contraction_rank(f("dx1^dx2"), rng) == 2);       // degenerate 2-form on R^3
}
