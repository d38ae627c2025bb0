#include "koszul/dgla.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

Carrier Carrier::basic(std::string tag, std::vector<int> degrees,
                       std::function<Element(Rng&, int)> sample) {
  Carrier c;
  c.tag = std::move(tag);
  c.degrees = std::move(degrees);
  c.sample = std::move(sample);
  c.equal = [](const Element& a, const Element& b) { return element_equal(a, b); };
  c.is_zero = [](const Element& a) { return a.is_zero(); };
  c.render = [](const Element& a) { return element_render(a); };
  return c;
}

Element smallg_element(const SmallGElement& v, int r) {
  int degree = 0;
  bool seen = false;
  auto claim = [&](int d) {
    if (seen && degree != d) throw InvalidInput("smallg_element: inhomogeneous slots");
    degree = d;
    seen = true;
  };
  if (!v.form.is_zero()) {
    auto fd = v.form.form_degree();
    if (!fd) throw InvalidInput("smallg_element: form part not homogeneous");
    claim(*fd - r);
  }
  if (!v.iota.is_zero()) claim(-1);
  if (!v.lie.is_zero()) claim(0);
  return Element(Value(v), degree);
}

Element smallg_form_element(const PolyForm& w, int r) {
  if (w.is_zero()) return zero_element();
  return smallg_element(sg_form(w), r);
}

Element form_element(const PolyForm& w, int r) {
  if (w.is_zero()) return zero_element();
  auto fd = w.form_degree();
  if (!fd) throw InvalidInput("form_element: not homogeneous");
  return Element(Value(w), *fd - r);
}

Element field_element(const PolyVectorField& X) { return Element(Value(X), 0); }

Element gradedpoly_element(const GradedPoly& f) {
  if (f.is_zero()) return zero_element();
  return Element(Value(f), f.degree());
}

namespace {

const SmallGElement& as_smallg(const Element& e) {
  if (auto* v = std::get_if<SmallGElement>(&e.value)) return *v;
  throw InvalidInput("expected a Cartan/semidirect-product element");
}

const PolyForm& as_form(const Element& e) {
  if (auto* v = std::get_if<PolyForm>(&e.value)) return *v;
  throw InvalidInput("expected a differential form element");
}

const GradedPoly& as_gp(const Element& e) {
  if (auto* v = std::get_if<GradedPoly>(&e.value)) return *v;
  throw InvalidInput("expected a graded polynomial element");
}

SmallGElement smallg_zero(int n) {
  return SmallGElement{PolyForm(n), PolyVectorField(n), PolyVectorField(n)};
}

// The bracket table of g_r = Cartan x Omega[r]:
//   {X_[1], a} = iota_X a,  {X, a} = Lie_X a,  {X, Y} = [X,Y],
//   {X, Y_[1]} = [X,Y]_[1], all other slots zero,
// with the reversed entries fixed by graded antisymmetry (for a form part of
// internal degree da, {a, X_[1]} = -(-1)^{da} iota_X a).
Element smallg_bracket_raw(int n, const std::vector<Element>& args) {
  const SmallGElement& a = as_smallg(args[0]);
  const SmallGElement& b = as_smallg(args[1]);
  const int da = args[0].degree;
  SmallGElement out = smallg_zero(n);
  out.form = contract(a.iota, b.form) + lie_derivative(a.lie, b.form) - lie_derivative(b.lie, a.form);
  PolyForm rev = contract(b.iota, a.form);
  if (!rev.is_zero()) {
    // {a_form, X_b[1]} = -(-1)^{da} iota_{X_b} a_form
    out.form = out.form + ((da % 2 == 0) ? -rev : rev);
  }
  out.lie = vf_bracket(a.lie, b.lie);
  out.iota = vf_bracket(a.lie, b.iota) - vf_bracket(b.lie, a.iota);
  return Element(Value(std::move(out)), 0);
}

Element smallg_diff_raw(int n, const std::vector<Element>& args) {
  const SmallGElement& a = as_smallg(args[0]);
  SmallGElement out = smallg_zero(n);
  out.form = de_rham(a.form);
  out.lie = a.iota;
  return Element(Value(std::move(out)), 0);
}

PolyVectorField random_combination(Rng& rng, const std::vector<PolyVectorField>& basis, int n) {
  PolyVectorField X(n);
  if (basis.empty()) return X;
  int picks = static_cast<int>(rng.next_int(1, 2));
  for (int t = 0; t < picks; ++t) {
    const auto& b = basis[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(basis.size()) - 1))];
    X = X + rng.next_coeff() * b;
  }
  return X;
}

}  // namespace

Dgla make_cartan(int n, int max_poly_deg) {
  std::string tag = "cartan:" + std::to_string(n);
  Carrier carrier = Carrier::basic(tag, {-1, 0}, [n, max_poly_deg](Rng& rng, int degree) {
    SmallGElement v = smallg_zero(n);
    if (degree == -1) v.iota = random_field(rng, n, max_poly_deg);
    if (degree == 0) v.lie = random_field(rng, n, max_poly_deg);
    return Element(Value(std::move(v)), degree);
  });
  Dgla g;
  g.name = "cartan(n=" + std::to_string(n) + ")";
  g.carrier = std::move(carrier);
  g.diff = MultiMap::make(1, 1, tag, tag,
                          [n](const std::vector<Element>& a) { return smallg_diff_raw(n, a); });
  g.bracket = MultiMap::make(2, 0, tag, tag,
                             [n](const std::vector<Element>& a) { return smallg_bracket_raw(n, a); });
  return g;
}

Dgla make_small_g(int n, int r, int max_poly_deg) {
  std::string tag = "smallg:" + std::to_string(n) + ":" + std::to_string(r);
  std::vector<int> degrees;
  for (int k = -r; k <= n - r; ++k) degrees.push_back(k);
  // iota slot sits at -1, lie slot at 0; both are already covered for r >= 1.
  Carrier carrier = Carrier::basic(tag, degrees, [n, r, max_poly_deg](Rng& rng, int degree) {
    SmallGElement v = smallg_zero(n);
    const int fd = degree + r;
    const bool form_possible = fd >= 0 && fd <= n;
    const bool field_slot = degree == -1 || degree == 0;
    bool take_field = field_slot && (!form_possible || rng.next_bool());
    bool take_form = form_possible && (!take_field || rng.next_bool());
    if (take_form) {
      v.form = random_form(rng, n, fd, max_poly_deg);
      if (rng.next_int(0, 3) == 0) {
        auto adv = adversarial_forms(n, fd);
        v.form = v.form + adv[static_cast<std::size_t>(
                              rng.next_int(0, static_cast<long>(adv.size()) - 1))].component(fd);
      }
    }
    if (take_field && degree == -1) v.iota = random_field(rng, n, max_poly_deg);
    if (take_field && degree == 0) v.lie = random_field(rng, n, max_poly_deg);
    return Element(Value(std::move(v)), degree);
  });
  Dgla g;
  g.name = "g_" + std::to_string(r) + "(n=" + std::to_string(n) + ")";
  g.carrier = std::move(carrier);
  g.diff = MultiMap::make(1, 1, tag, tag,
                          [n](const std::vector<Element>& a) { return smallg_diff_raw(n, a); });
  g.bracket = MultiMap::make(2, 0, tag, tag,
                             [n](const std::vector<Element>& a) { return smallg_bracket_raw(n, a); });
  return g;
}

Dgla make_large_g(int n, int r, int max_poly_deg) {
  GradedCoordinateSystem sys{n, r};
  std::string tag = "hatg:" + std::to_string(n) + ":" + std::to_string(r);
  std::vector<int> degrees;
  for (int k = -r; k <= r + 2; ++k) degrees.push_back(k);
  Carrier carrier = Carrier::basic(tag, degrees, [sys, max_poly_deg](Rng& rng, int degree) {
    GradedPoly f = random_graded_poly(rng, sys, degree, max_poly_deg);
    if (f.is_zero()) return zero_element();
    return Element(Value(std::move(f)), degree);
  });
  GradedPoly S = canonical_S(sys);
  Dgla g;
  g.name = "ghat_" + std::to_string(r) + "(n=" + std::to_string(n) + ")";
  g.carrier = std::move(carrier);
  g.diff = MultiMap::make(1, 1, tag, tag, [S](const std::vector<Element>& a) {
    return Element(Value(poisson_bracket(S, as_gp(a[0]))), 0);
  });
  g.bracket = MultiMap::make(2, 0, tag, tag, [](const std::vector<Element>& a) {
    return Element(Value(poisson_bracket(as_gp(a[0]), as_gp(a[1]))), 0);
  });
  return g;
}

Dgla make_hamiltonian_fields(int n, const PolyForm& sigma, int max_poly_deg) {
  if (!is_closed(sigma)) throw InvalidInput("make_hamiltonian_fields: sigma is not closed");
  auto basis = hamiltonian_field_basis(sigma, max_poly_deg);
  std::string tag = "xham:" + std::to_string(n);
  Carrier carrier = Carrier::basic(tag, {0}, [n, basis](Rng& rng, int) {
    return Element(Value(random_combination(rng, basis, n)), 0);
  });
  Dgla g;
  g.name = "xham(n=" + std::to_string(n) + ")";
  g.carrier = std::move(carrier);
  g.diff = MultiMap::zero(1, 1, tag, tag);
  g.bracket = MultiMap::make(2, 0, tag, tag, [](const std::vector<Element>& a) {
    if (a[0].is_zero() || a[1].is_zero()) return zero_element();
    const auto* X = std::get_if<PolyVectorField>(&a[0].value);
    const auto* Y = std::get_if<PolyVectorField>(&a[1].value);
    if (!X || !Y) throw InvalidInput("vector-field bracket on non-field element");
    return Element(Value(vf_bracket(*X, *Y)), 0);
  });
  return g;
}

Dgla make_truncated_de_rham(int n, int r, int max_poly_deg) {
  std::string tag = "tau:" + std::to_string(n) + ":" + std::to_string(r);
  std::vector<int> degrees;
  for (int k = -r; k <= 0; ++k) degrees.push_back(k);
  Carrier carrier = Carrier::basic(tag, degrees, [n, r, max_poly_deg](Rng& rng, int degree) {
    if (degree == 0) {
      // degree-0 slot is d(Omega^{r-1}): exact r-forms
      PolyForm w = de_rham(random_form(rng, n, r - 1, max_poly_deg));
      if (w.is_zero()) return zero_element();
      return Element(Value(std::move(w)), 0);
    }
    PolyForm w = random_form(rng, n, degree + r, max_poly_deg);
    if (w.is_zero()) return zero_element();
    return Element(Value(std::move(w)), degree);
  });
  Dgla g;
  g.name = "tau(Omega[" + std::to_string(r) + "], n=" + std::to_string(n) + ")";
  g.carrier = std::move(carrier);
  g.diff = MultiMap::make(1, 1, tag, tag, [](const std::vector<Element>& a) {
    if (a[0].is_zero()) return zero_element();
    return Element(Value(de_rham(as_form(a[0]))), 0);
  });
  g.bracket = MultiMap::zero(2, 0, tag, tag);
  return g;
}

Dgla make_lie_algebra(std::string name,
                      std::vector<std::vector<std::vector<Rational>>> constants) {
  const std::size_t dim = constants.size();
  std::string tag = "lie:" + name;
  Carrier carrier = Carrier::basic(tag, {0}, [dim](Rng& rng, int) {
    LieCoords v;
    v.c.resize(dim, Rational(0));
    for (auto& q : v.c) q = rng.next_coeff();
    return Element(Value(std::move(v)), 0);
  });
  Dgla g;
  g.name = std::move(name);
  g.carrier = std::move(carrier);
  g.diff = MultiMap::zero(1, 1, tag, tag);
  g.bracket = MultiMap::make(2, 0, tag, tag, [constants, dim](const std::vector<Element>& a) {
    if (a[0].is_zero() || a[1].is_zero()) return zero_element();
    const auto& x = std::get<LieCoords>(a[0].value);
    const auto& y = std::get<LieCoords>(a[1].value);
    LieCoords out;
    out.c.resize(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Rational f = x.c[i] * y.c[j];
        if (is_zero(f)) continue;
        for (std::size_t k = 0; k < dim; ++k) out.c[k] += f * constants[i][j][k];
      }
    return Element(Value(std::move(out)), 0);
  });
  return g;
}

bool mc_check(const Dgla& g, const Element& alpha) {
  if (g.carrier.is_zero(alpha)) return true;
  if (alpha.degree != 1) throw InvalidInput("mc_check: element must be homogeneous of degree 1");
  Element lhs = element_add(g.diff({alpha}),
                            element_scale(Rational(1, 2), g.bracket({alpha, alpha})));
  return g.carrier.is_zero(lhs);
}

Dgla twist(const Dgla& g, const Element& sigma) {
  if (!mc_check(g, sigma)) throw InvalidInput("twist: not a Maurer-Cartan element");
  Dgla t = g;
  t.name = g.name + " twisted";
  MultiMap base_diff = g.diff;
  MultiMap bracket = g.bracket;
  t.diff = MultiMap::make_skew(1, 1, g.diff.domain(), g.diff.codomain(),
                               [base_diff, bracket, sigma](const std::vector<Element>& a) {
                                 return element_add(base_diff(a), bracket({sigma, a[0]}));
                               });
  return t;
}

Dgla truncate_nonneg(const Dgla& g) {
  Dgla t = g;
  t.name = g.name + " (degrees >= 0)";
  t.carrier.degrees.clear();
  for (int d : g.carrier.degrees)
    if (d >= 0) t.carrier.degrees.push_back(d);
  return t;
}

Element gauge_action(const Dgla& g, const Element& a, const Element& x, int cap) {
  if (!g.carrier.is_zero(a) && a.degree != 0)
    throw InvalidInput("gauge_action: gauge parameter must be degree 0");
  if (!g.carrier.is_zero(x) && x.degree != 1)
    throw InvalidInput("gauge_action: target must be degree 1");
  Element acc = x;
  Element cur = element_add(g.bracket({a, x}), element_neg(g.diff({a})));
  Rational fact(1);
  int k = 1;
  while (!g.carrier.is_zero(cur)) {
    if (k > cap)
      throw UnsupportedInput("gauge_action: adjoint series still nonzero after " +
                             std::to_string(cap) + " iterations");
    fact *= Rational(k);
    acc = element_add(acc, element_scale(Rational(1) / fact, cur));
    cur = g.bracket({a, cur});
    ++k;
  }
  return acc;
}

DglaMorphism chi_beta(int n, int r, const PolyForm& beta, const PolyForm& sigma,
                      int max_poly_deg) {
  if (!beta.is_zero() && beta.form_degree() != r)
    throw InvalidInput("chi_beta: beta must have form-degree r");
  if (!is_closed(sigma)) throw InvalidInput("chi_beta: sigma must be closed");
  PolyForm sigma2 = sigma + de_rham(beta);
  Dgla base = make_small_g(n, r, max_poly_deg);
  Dgla src = twist(base, smallg_form_element(sigma, r));
  Dgla tgt = twist(base, smallg_form_element(sigma2, r));
  DglaMorphism mor;
  mor.name = "chi_beta";
  mor.source = std::move(src);
  mor.target = std::move(tgt);
  mor.map = [beta, n](const Element& e) -> Element {
    if (e.is_zero()) return zero_element();
    const SmallGElement& v = as_smallg(e);
    SmallGElement out = v;
    out.form = v.form + contract(v.iota, beta) + lie_derivative(v.lie, beta);
    return Element(Value(std::move(out)), e.degree);
  };
  return mor;
}

namespace {

Element sample_nonzero(const Dgla& g, Rng& rng, int degree, int tries = 6) {
  for (int t = 0; t < tries; ++t) {
    Element e = g.carrier.sample(rng, degree);
    if (!g.carrier.is_zero(e)) return e;
  }
  return g.carrier.sample(rng, degree);
}

void expect_equal(const Dgla& g, const std::string& check, const Element& lhs, const Element& rhs,
                  const std::vector<Element>& inputs, CheckResult* res) {
  ++res->checks_run;
  if (g.carrier.equal(lhs, rhs)) return;
  Failure f;
  f.check = check;
  f.arity = static_cast<int>(inputs.size());
  for (const auto& e : inputs) f.inputs.push_back(g.carrier.render(e));
  f.lhs = g.carrier.render(lhs);
  f.rhs = g.carrier.render(rhs);
  res->failures.push_back(std::move(f));
}

void expect_zero(const Dgla& g, const std::string& check, const Element& lhs,
                 const std::vector<Element>& inputs, CheckResult* res) {
  expect_equal(g, check, lhs, zero_element(), inputs, res);
}

}  // namespace

CheckResult dgla_axiom_check(const Dgla& g, Rng& rng, int samples) {
  CheckResult res;
  res.name = g.name;
  const auto& degs = g.carrier.degrees;
  auto pick_degree = [&](Rng& r) {
    return degs[static_cast<std::size_t>(r.next_int(0, static_cast<long>(degs.size()) - 1))];
  };
  for (int s = 0; s < samples; ++s) {
    Element a = sample_nonzero(g, rng, pick_degree(rng));
    Element b = sample_nonzero(g, rng, pick_degree(rng));
    Element c = sample_nonzero(g, rng, pick_degree(rng));

    expect_zero(g, "d^2 = 0", g.diff({g.diff({a})}), {a}, &res);

    // d{a,b} = {da,b} + (-1)^{|a|} {a,db}
    Element lhs = g.diff({g.bracket({a, b})});
    Element rhs = g.bracket({g.diff({a}), b});
    Element second = g.bracket({a, g.diff({b})});
    if (((a.degree % 2) + 2) % 2 != 0) second = element_neg(second);
    expect_equal(g, "derivation", lhs, element_add(rhs, second), {a, b}, &res);

    // {a,b} = -(-1)^{|a||b|} {b,a}
    Element sym = g.bracket({b, a});
    if ((a.degree * b.degree) % 2 == 0) sym = element_neg(sym);
    expect_equal(g, "antisymmetry", g.bracket({a, b}), sym, {a, b}, &res);

    // {a,{b,c}} = {{a,b},c} + (-1)^{|a||b|} {b,{a,c}}
    Element j1 = g.bracket({a, g.bracket({b, c})});
    Element j2 = g.bracket({g.bracket({a, b}), c});
    Element j3 = g.bracket({b, g.bracket({a, c})});
    if ((a.degree * b.degree) % 2 != 0) j3 = element_neg(j3);
    expect_equal(g, "jacobi", j1, element_add(j2, j3), {a, b, c}, &res);
  }
  return res;
}

CheckResult dgla_morphism_check(const DglaMorphism& mor, Rng& rng, int samples) {
  CheckResult res;
  res.name = mor.name;
  const Dgla& s = mor.source;
  const Dgla& t = mor.target;
  const auto& degs = s.carrier.degrees;
  for (int i = 0; i < samples; ++i) {
    Element a = sample_nonzero(s, rng,
                               degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]);
    Element b = sample_nonzero(s, rng,
                               degs[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(degs.size()) - 1))]);
    expect_equal(t, mor.name + ": d intertwined", mor.map(s.diff({a})), t.diff({mor.map(a)}), {a},
                 &res);
    expect_equal(t, mor.name + ": bracket intertwined", mor.map(s.bracket({a, b})),
                 t.bracket({mor.map(a), mor.map(b)}), {a, b}, &res);
  }
  return res;
}

}  // namespace koszul
