#include "koszul/linfty.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

Element suspend(const Element& e) {
  if (e.is_zero()) return zero_element();
  return Element(e.value, e.degree + 1);
}

Element desuspend(const Element& e) {
  if (e.is_zero()) return zero_element();
  return Element(e.value, e.degree - 1);
}

std::vector<Rational> bernoulli_numbers(int m) {
  std::vector<Rational> B(static_cast<std::size_t>(m) + 1, Rational(0));
  B[0] = Rational(1);
  for (int k = 1; k <= m; ++k) {
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    Rational acc(0);
    Rational binom(1);  // C(k+1, 0)
    for (int j = 0; j < k; ++j) {
      acc += binom * B[static_cast<std::size_t>(j)];
      binom *= Rational(k + 1 - j);
      binom /= Rational(j + 1);
    }
    B[static_cast<std::size_t>(k)] = -acc / binom;
  }
  return B;
}

Rational getzler_coefficient(int n) {
  if (n < 2) throw InvalidInput("getzler_coefficient: defined for arity >= 2");
  // c_n = (-1)^n B_{n-1}/(n-1)! with B_1 = +1/2 (equivalently
  // (-1)^{n-1} B^-_{n-1}/(n-1)!): the convention singled out by the
  // validation triangle (identity suite, Courant binary match, small/large
  // agreement) and pinned in the tests.
  static const std::vector<Rational> B = bernoulli_numbers(16);
  if (n - 1 >= static_cast<int>(B.size())) throw InvalidInput("getzler_coefficient: arity too large");
  Rational b = B[static_cast<std::size_t>(n - 1)];
  if ((n - 1) % 2 != 0) b = -b;  // switch to the B_1 = +1/2 convention
  if (n % 2 != 0) b = -b;        // (-1)^n
  return b / factorial(static_cast<unsigned>(n - 1));
}

LInftyStructure linfty_from_dgla(const Dgla& g) {
  LInftyStructure L;
  L.name = g.name + " as L-infinity";
  L.carrier = g.carrier;
  L.brackets = {g.diff, g.bracket};
  return L;
}

namespace {

Carrier fiber_carrier(const Dgla& g) {
  Carrier c;
  c.tag = "fib:" + g.carrier.tag;
  for (int d : g.carrier.degrees)
    if (d < 0) c.degrees.push_back(d + 1);
  auto base = g.carrier;
  c.sample = [base](Rng& rng, int degree) { return suspend(base.sample(rng, degree - 1)); };
  c.equal = base.equal;
  c.is_zero = base.is_zero;
  c.render = base.render;
  return c;
}

Element sample_nonzero(const Carrier& c, Rng& rng, int degree, int tries = 6) {
  for (int t = 0; t < tries; ++t) {
    Element e = c.sample(rng, degree);
    if (!c.is_zero(e)) return e;
  }
  return c.sample(rng, degree);
}

std::vector<Element> sample_tuple(const Carrier& c, Rng& rng, int k) {
  std::vector<Element> args;
  for (int i = 0; i < k; ++i) {
    int d = c.degrees[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(c.degrees.size()) - 1))];
    args.push_back(sample_nonzero(c, rng, d));
  }
  return args;
}

void record_failure(CheckResult* res, const Carrier& c, const std::string& check, int arity,
                    const std::vector<Element>& inputs, const Element& lhs, const Element& rhs) {
  Failure f;
  f.check = check;
  f.arity = arity;
  for (const auto& e : inputs) f.inputs.push_back(c.render(e));
  f.lhs = c.render(lhs);
  f.rhs = c.render(rhs);
  res->failures.push_back(std::move(f));
}

}  // namespace

LInftyStructure getzler_brackets_custom(const Dgla& g, int K, const CoefficientFn& cn) {
  LInftyStructure L;
  L.name = "fiber(" + g.name + ")";
  L.carrier = fiber_carrier(g);
  const std::string tag = L.carrier.tag;
  const Dgla base = g;

  // unary: the truncated differential, d a for |a| < -1 and 0 otherwise
  L.brackets.push_back(MultiMap::make_skew(1, 1, tag, tag, [base](const std::vector<Element>& v) {
    Element w = desuspend(v[0]);
    if (w.is_zero() || w.degree >= -1) return zero_element();
    return suspend(base.diff({w}));
  }));

  for (int arity = 2; arity <= K; ++arity) {
    const Rational coeff = cn(arity);
    auto eval = [base, arity, coeff](const std::vector<Element>& v) -> Element {
      if (is_zero(coeff)) return zero_element();
      std::vector<Element> w;
      std::vector<int> wdeg;
      for (const auto& e : v) {
        w.push_back(desuspend(e));
        wdeg.push_back(w.back().degree);
      }
      // suspension adapter: Koszul cost of moving the n desuspensions past
      // the arguments
      int dec = 0;
      for (int i = 0; i + 1 < arity; ++i) dec += (arity - 1 - i) * v[static_cast<std::size_t>(i)].degree;
      Element acc = zero_element();
      for (const auto& perm : all_permutations(arity)) {
        // graded-symmetric sum: pure Koszul sign, no signature
        const int eps = koszul_epsilon(perm, wdeg);
        // D applies d in negative degrees; on g^{<0} that is everywhere
        Element t = base.diff({w[static_cast<std::size_t>(perm[0])]});
        for (int i = 1; i < arity && !t.is_zero(); ++i)
          t = base.bracket({t, w[static_cast<std::size_t>(perm[i])]});
        if (t.is_zero()) continue;
        acc = element_add(acc, eps < 0 ? element_neg(t) : t);
      }
      Element out = element_scale(coeff, acc);
      if (((dec % 2) + 2) % 2 != 0) out = element_neg(out);
      return suspend(out);
    };
    L.brackets.push_back(MultiMap::make_skew(arity, 2 - arity, tag, tag, std::move(eval)));
  }
  return L;
}

LInftyStructure getzler_brackets(const Dgla& g, int K) {
  return getzler_brackets_custom(g, K, [](int n) { return getzler_coefficient(n); });
}

LInftyStructure courant_linfty(int n, int r, const PolyForm& sigma, int K) {
  if (!is_closed(sigma)) throw InvalidInput("courant_linfty: sigma is not closed");
  if (!sigma.is_zero() && sigma.form_degree() != r + 1)
    throw InvalidInput("courant_linfty: sigma must have form-degree r+1");
  Dgla g = make_small_g(n, r);
  Dgla gt = twist(g, smallg_form_element(sigma, r));
  LInftyStructure L = getzler_brackets(gt, K);
  L.name = "courant(r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")";
  return L;
}

LInftyStructure rogers_linfty(int n, int r, const PolyForm& sigma, int K) {
  if (!is_closed(sigma)) throw InvalidInput("rogers_linfty: sigma is not closed");
  if (!sigma.is_zero() && sigma.form_degree() != r + 1)
    throw InvalidInput("rogers_linfty: sigma must have form-degree r+1");
  const std::string tag = "rogers:" + std::to_string(n) + ":" + std::to_string(r);
  auto basis = hamiltonian_field_basis(sigma, 2);

  Carrier carrier;
  carrier.tag = tag;
  for (int d = 1 - r; d <= 0; ++d) carrier.degrees.push_back(d);
  carrier.sample = [n, r, sigma, basis](Rng& rng, int degree) -> Element {
    if (degree == 0) {
      // Hamiltonian pair (X, alpha) with iota_X sigma + d alpha = 0
      PolyVectorField X(n);
      if (!basis.empty()) {
        int picks = static_cast<int>(rng.next_int(1, 2));
        for (int t = 0; t < picks; ++t)
          X = X + rng.next_coeff() *
                      basis[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(basis.size()) - 1))];
      }
      PolyForm ix = contract(X, sigma);
      PolyForm alpha = ix.is_zero() ? PolyForm(n) : -primitive(ix);
      if (r >= 2)
        alpha = alpha + de_rham(random_form(rng, n, r - 2, 2));
      else
        alpha = alpha + PolyForm::scalar(n, rng.next_coeff());
      SmallGElement v{alpha, X, PolyVectorField(n)};
      return Element(Value(std::move(v)), 0);
    }
    PolyForm w = random_form(rng, n, degree + r - 1, 2);
    if (w.is_zero()) return zero_element();
    return Element(Value(sg_form(w)), degree);
  };
  carrier.equal = [](const Element& a, const Element& b) { return element_equal(a, b); };
  carrier.is_zero = [](const Element& a) { return a.is_zero(); };
  carrier.render = [](const Element& a) { return element_render(a); };

  LInftyStructure L;
  L.name = "rogers(r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")";
  L.carrier = carrier;

  // complex differential: forms move up, Hamiltonian pairs are cycles
  L.brackets.push_back(
      MultiMap::make_skew(1, 1, tag, tag, [n](const std::vector<Element>& v) -> Element {
        if (v[0].is_zero() || v[0].degree >= 0) return zero_element();
        const auto& sg = std::get<SmallGElement>(v[0].value);
        PolyForm dw = de_rham(sg.form);
        if (dw.is_zero()) return zero_element();
        return Element(Value(sg_form(dw)), 0);
      }));

  for (int k = 2; k <= K; ++k) {
    auto eval = [n, k, sigma](const std::vector<Element>& v) -> Element {
      for (const auto& e : v)
        if (e.is_zero() || e.degree != 0) return zero_element();
      PolyForm w = sigma;
      for (int i = k - 1; i >= 0 && !w.is_zero(); --i)
        w = contract(std::get<SmallGElement>(v[static_cast<std::size_t>(i)].value).iota, w);
      if (k == 2) {
        const auto& a = std::get<SmallGElement>(v[0].value);
        const auto& b = std::get<SmallGElement>(v[1].value);
        SmallGElement out{-w, vf_bracket(a.iota, b.iota), PolyVectorField(n)};
        if (out.is_zero()) return zero_element();
        return Element(Value(std::move(out)), 0);
      }
      if (w.is_zero()) return zero_element();
      PolyForm val = (k % 2 == 0) ? -w : w;  // (-1)^{k+1}
      return Element(Value(sg_form(val)), 2 - k);
    };
    L.brackets.push_back(MultiMap::make(k, 2 - k, tag, tag, std::move(eval)));
  }
  return L;
}

Element courant_pair_element(const CourantSection& s, int r) {
  if (!s.form.is_zero() && s.form.form_degree() != r - 1)
    throw InvalidInput("courant_pair_element: form part must have form-degree r-1");
  SmallGElement v{s.form, s.vf, PolyVectorField(s.vf.n ? s.vf.n : s.form.n)};
  if (v.is_zero()) return zero_element();
  return Element(Value(std::move(v)), 0);
}

CourantSection courant_section_from(const Element& e, int n) {
  if (e.is_zero()) return CourantSection{PolyVectorField(n), PolyForm(n)};
  const auto& v = std::get<SmallGElement>(e.value);
  return CourantSection{v.iota, v.form};
}

LInftyMorphism iota_infty(int n, int r, const PolyForm& sigma, int K) {
  if (!is_closed(sigma)) throw InvalidInput("iota_infty: sigma is not closed");
  LInftyMorphism Phi;
  Phi.name = "iota_infty";
  Phi.source = make_hamiltonian_fields(n, sigma);
  Phi.target = make_truncated_de_rham(n, r);
  const std::string dom = Phi.source.carrier.tag;
  const std::string cod = Phi.target.carrier.tag;
  for (int k = 1; k <= K; ++k) {
    auto eval = [sigma, k](const std::vector<Element>& v) -> Element {
      PolyForm w = sigma;
      for (int i = k - 1; i >= 0 && !w.is_zero(); --i) {
        if (v[static_cast<std::size_t>(i)].is_zero()) return zero_element();
        w = contract(std::get<PolyVectorField>(v[static_cast<std::size_t>(i)].value), w);
      }
      if (w.is_zero()) return zero_element();
      return Element(Value(-w), 0);
    };
    Phi.components.push_back(MultiMap::make(k, 1 - k, dom, cod, std::move(eval)));
  }
  return Phi;
}

LInftyMorphism phi_morphism(int n, int r, int max_poly_deg) {
  LInftyMorphism Phi;
  Phi.name = "phi(r=" + std::to_string(r) + ")";
  Phi.source = make_small_g(n, r, max_poly_deg);
  Phi.target = make_small_g(n, r + 1, max_poly_deg);
  const std::string dom = Phi.source.carrier.tag;
  const std::string cod = Phi.target.carrier.tag;
  Phi.components.push_back(
      MultiMap::make_skew(1, 0, dom, cod, [](const std::vector<Element>& v) -> Element {
        if (v[0].is_zero()) return zero_element();
        const auto& a = std::get<SmallGElement>(v[0].value);
        SmallGElement out{de_rham(a.form), a.iota, a.lie};
        if (out.is_zero()) return zero_element();
        return Element(Value(std::move(out)), 0);
      }));
  Phi.components.push_back(
      MultiMap::make(2, -1, dom, cod, [](const std::vector<Element>& v) -> Element {
        const auto& a = std::get<SmallGElement>(v[0].value);
        const auto& b = std::get<SmallGElement>(v[1].value);
        PolyForm out = contract(a.iota, b.form);
        PolyForm rev = contract(b.iota, a.form);
        if (!rev.is_zero()) out = out + ((v[0].degree % 2 == 0) ? -rev : rev);
        if (out.is_zero()) return zero_element();
        return Element(Value(sg_form(out)), 0);
      }));
  return Phi;
}

Element morphism_mc_image(const LInftyMorphism& Phi, const Element& mu) {
  Element acc = zero_element();
  for (std::size_t k = 1; k <= Phi.components.size(); ++k) {
    std::vector<Element> args(k, mu);
    Element v = Phi.components[k - 1](args);
    acc = element_add(acc, element_scale(Rational(1) / factorial(static_cast<unsigned>(k)), v));
  }
  return acc;
}

LInftyMorphism twist_morphism(const LInftyMorphism& Phi, const Element& mu) {
  LInftyMorphism out;
  out.name = Phi.name + " twisted";
  out.source = twist(Phi.source, mu);
  out.target = twist(Phi.target, morphism_mc_image(Phi, mu));
  const int len = static_cast<int>(Phi.components.size());
  for (int k = 1; k <= len; ++k) {
    auto comps = Phi.components;
    auto eval = [comps, mu, k, len](const std::vector<Element>& v) -> Element {
      Element acc = zero_element();
      Rational jfact(1);
      for (int j = 0; j + k <= len; ++j) {
        if (j > 0) jfact *= Rational(j);
        std::vector<Element> args(static_cast<std::size_t>(j), mu);
        args.insert(args.end(), v.begin(), v.end());
        Element t = comps[static_cast<std::size_t>(j + k - 1)](args);
        acc = element_add(acc, element_scale(Rational(1) / jfact, t));
      }
      return acc;
    };
    out.components.push_back(MultiMap::make_skew(k, 1 - k, Phi.components[static_cast<std::size_t>(k - 1)].domain(),
                                                 Phi.components[static_cast<std::size_t>(k - 1)].codomain(),
                                                 std::move(eval)));
  }
  return out;
}

CheckResult linfty_identity_check(const LInftyStructure& L, int K, Rng& rng, int samples) {
  CheckResult res;
  res.name = L.name + ": homotopy Jacobi";
  const int len = static_cast<int>(L.brackets.size());
  for (int k = 1; k <= K; ++k) {
    // the arity-k component of mu |> mu
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= len; ++i) {
      int j = k + 1 - i;
      if (j >= 1 && j <= len) pairs.emplace_back(i, j);
    }
    std::vector<MultiMap> terms;
    for (auto [i, j] : pairs)
      terms.push_back(nr_product(L.brackets[static_cast<std::size_t>(i - 1)],
                                 L.brackets[static_cast<std::size_t>(j - 1)]));
    for (int s = 0; s < samples; ++s) {
      auto args = sample_tuple(L.carrier, rng, k);
      Element acc = zero_element();
      for (const auto& t : terms) acc = element_add(acc, t(args));
      ++res.checks_run;
      if (!L.carrier.is_zero(acc))
        record_failure(&res, L.carrier, "NR Maurer-Cartan", k, args, acc, zero_element());
    }
  }
  return res;
}

namespace {

MultiMap comp_or_zero(const LInftyMorphism& Phi, int k) {
  if (k >= 1 && k <= static_cast<int>(Phi.components.size()))
    return Phi.components[static_cast<std::size_t>(k - 1)];
  return MultiMap::zero(std::max(k, 1), 1 - k, Phi.source.carrier.tag, Phi.target.carrier.tag);
}

// [.,.]_h o S_{2,k}(Phi): all ways to split k arguments over two components.
MultiMap s2k_map(const LInftyMorphism& Phi, int k) {
  const MultiMap hb = Phi.target.bracket;
  auto PhiC = Phi.components;
  const std::string dom = Phi.source.carrier.tag;
  const std::string cod = Phi.target.carrier.tag;
  auto eval = [PhiC, hb, k, dom, cod](const std::vector<Element>& args) -> Element {
    Element acc = zero_element();
    const int len = static_cast<int>(PhiC.size());
    for (int i = 1; i <= k / 2; ++i) {
      const int j = k - i;
      if (i > len || j > len || j < 1) continue;
      const MultiMap& fi = PhiC[static_cast<std::size_t>(i - 1)];
      const MultiMap& fj = PhiC[static_cast<std::size_t>(j - 1)];
      const int dj = fj.degree();
      const int sign_i = ((1 - i) % 2 + 2) % 2 != 0 ? -1 : 1;  // (-1)^{deg Phi_i}
      for (const auto& term : unshuffle_apply_ordered(i, j, args)) {
        std::vector<Element> first(term.args.begin(), term.args.begin() + i);
        std::vector<Element> second(term.args.begin() + i, term.args.end());
        int cross = 0;
        for (const auto& e : first) cross += e.degree;
        Element vi = fi(first);
        Element vj = fj(second);
        if (vi.is_zero() || vj.is_zero()) continue;
        Element val = hb({vi, vj});
        int sg = term.sp.sign * sign_i * (((dj * cross) % 2 + 2) % 2 != 0 ? -1 : 1);
        if (sg < 0) val = element_neg(val);
        acc = element_add(acc, val);
      }
    }
    return acc;
  };
  return MultiMap::make_skew(k, 2 - k, dom, cod, std::move(eval));
}

}  // namespace

MultiMap morphism_identity_lhs(const LInftyMorphism& Phi, int k) {
  MultiMap lhs = nr_product(comp_or_zero(Phi, k), Phi.source.diff);
  if (k >= 2) lhs = mm_add(lhs, nr_product(comp_or_zero(Phi, k - 1), Phi.source.bracket));
  return lhs;
}

MultiMap morphism_identity_rhs(const LInftyMorphism& Phi, int k) {
  return mm_add(nr_product(Phi.target.diff, comp_or_zero(Phi, k)), s2k_map(Phi, k));
}

CheckResult morphism_identity_check(const LInftyMorphism& Phi, int K, Rng& rng, int samples,
                                    bool ce_crosscheck) {
  CheckResult res;
  res.name = Phi.name + ": morphism identities";
  const Dgla& g = Phi.source;
  const Dgla& h = Phi.target;
  for (int k = 1; k <= K; ++k) {
    MultiMap lhs = morphism_identity_lhs(Phi, k);
    MultiMap rhs = morphism_identity_rhs(Phi, k);

    // independent route: the arity-k component of the Maurer-Cartan residual
    // of Phi inside CE(g,h)
    std::vector<MultiMap> ce_terms;
    if (ce_crosscheck) {
      ce_terms.push_back(ce_vertical(g, h, comp_or_zero(Phi, k)));
      if (k >= 2) ce_terms.push_back(ce_horizontal(g, comp_or_zero(Phi, k - 1)));
      for (int i = 1; i <= k - 1; ++i)
        ce_terms.push_back(
            mm_scale(Rational(1, 2), ce_bracket_maps(h, comp_or_zero(Phi, i), comp_or_zero(Phi, k - i))));
    }

    for (int s = 0; s < samples; ++s) {
      auto args = sample_tuple(g.carrier, rng, k);
      Element L = lhs(args);
      Element R = rhs(args);
      ++res.checks_run;
      if (!h.carrier.equal(L, R))
        record_failure(&res, h.carrier, "morphism identity", k, args, L, R);
      if (ce_crosscheck) {
        Element direct = element_add(L, element_neg(R));
        Element viace = zero_element();
        for (const auto& t : ce_terms) viace = element_add(viace, t(args));
        ++res.checks_run;
        if (!h.carrier.equal(direct, viace))
          record_failure(&res, h.carrier, "MC-in-CE crosscheck", k, args, direct, viace);
      }
    }
  }
  return res;
}

CheckResult morphism_restriction_check(const LInftyMorphism& Phi, Rng& rng, int samples) {
  CheckResult res;
  res.name = Phi.name + ": restriction to non-negative degrees";
  std::vector<int> nonneg;
  for (int d : Phi.source.carrier.degrees)
    if (d >= 0) nonneg.push_back(d);
  if (nonneg.empty()) return res;
  for (std::size_t k = 1; k <= Phi.components.size(); ++k) {
    for (int s = 0; s < samples; ++s) {
      std::vector<Element> args;
      for (std::size_t i = 0; i < k; ++i)
        args.push_back(sample_nonzero(
            Phi.source.carrier, rng,
            nonneg[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(nonneg.size()) - 1))]));
      Element out = Phi.components[k - 1](args);
      ++res.checks_run;
      if (!Phi.target.carrier.is_zero(out) && out.degree < 0)
        record_failure(&res, Phi.target.carrier, "restriction", static_cast<int>(k), args, out,
                       zero_element());
    }
  }
  return res;
}

DglaMorphism make_embedding(int n, int r, const PolyForm& sigma, int max_poly_deg) {
  GradedCoordinateSystem sys{n, r};
  Dgla small = make_small_g(n, r, max_poly_deg);
  Dgla large = make_large_g(n, r, max_poly_deg);
  Dgla src = sigma.is_zero() ? small : twist(small, smallg_form_element(sigma, r));
  Dgla tgt = sigma.is_zero()
                 ? large
                 : twist(large, Element(Value(pullback_form(sigma, sys)), 1));
  DglaMorphism mor;
  mor.name = "embedding g_r -> ghat_r";
  mor.source = std::move(src);
  mor.target = std::move(tgt);
  mor.map = [sys](const Element& e) -> Element {
    if (e.is_zero()) return zero_element();
    const auto& v = std::get<SmallGElement>(e.value);
    GradedPoly out = pullback_form(v.form, sys) + embed_iota(v.iota, sys) + embed_lie(v.lie, sys);
    if (out.is_zero()) return zero_element();
    return Element(Value(std::move(out)), e.degree);
  };
  return mor;
}

CheckResult getzler_agreement_check(int n, int r, const PolyForm& sigma, int K, Rng& rng,
                                    int samples) {
  CheckResult res;
  res.name = "small/large Getzler agreement (r=" + std::to_string(r) + ")";
  DglaMorphism em = make_embedding(n, r, sigma);
  LInftyStructure Ls = getzler_brackets(em.source, K);
  LInftyStructure Ll = getzler_brackets(em.target, K);
  auto embed_c = [&em](const Element& v) { return suspend(em.map(desuspend(v))); };
  for (int k = 1; k <= K; ++k) {
    for (int s = 0; s < samples; ++s) {
      auto args = sample_tuple(Ls.carrier, rng, k);
      std::vector<Element> eargs;
      for (const auto& a : args) eargs.push_back(embed_c(a));
      Element via_small = embed_c(Ls.brackets[static_cast<std::size_t>(k - 1)](args));
      Element via_large = Ll.brackets[static_cast<std::size_t>(k - 1)](eargs);
      ++res.checks_run;
      if (!Ll.carrier.equal(via_small, via_large))
        record_failure(&res, Ll.carrier, "model agreement", k, args, via_small, via_large);
    }
  }
  return res;
}

CheckResult courant_binary_check(int n, int r, const PolyForm& sigma, Rng& rng, int samples) {
  CheckResult res;
  res.name = "binary bracket vs Courant formula (r=" + std::to_string(r) + ")";
  LInftyStructure L = courant_linfty(n, r, sigma, 2);
  for (int s = 0; s < samples; ++s) {
    CourantSection a{random_field(rng, n, 2), random_form(rng, n, r - 1, 2)};
    CourantSection b{random_field(rng, n, 2), random_form(rng, n, r - 1, 2)};
    Element ea = courant_pair_element(a, r);
    Element eb = courant_pair_element(b, r);
    Element got = L.brackets[1]({ea, eb});
    CourantSection expect = courant_bracket(a, b, sigma);
    Element want = courant_pair_element(expect, r);
    ++res.checks_run;
    if (!element_equal(got, want))
      record_failure(&res, L.carrier, "binary = Courant bracket", 2, {ea, eb}, got, want);
  }
  return res;
}

CheckResult courant_chain_map_check(int n, int r, const PolyForm& sigma, Rng& rng, int samples,
                                    bool drop_rung) {
  CheckResult res;
  res.name = "Courant chain ladder (r=" + std::to_string(r) + ")";
  LInftyStructure src = courant_linfty(n, r, sigma, 1);
  LInftyStructure tgt = courant_linfty(n, r + 1, PolyForm(n), 1);
  LInftyMorphism Phi = phi_morphism(n, r);

  // ladder route: d on forms degree-wise, (d, id) on the top slot
  auto ladder = [n, drop_rung](const Element& v) -> Element {
    if (v.is_zero()) return zero_element();
    const auto& sg = std::get<SmallGElement>(v.value);
    // drop_rung: negative control, the top vertical (d, id) becomes (0, id)
    PolyForm dw = (drop_rung && v.degree == 0) ? PolyForm(n) : de_rham(sg.form);
    SmallGElement out{dw, sg.iota, PolyVectorField(n)};
    if (out.is_zero()) return zero_element();
    return Element(Value(std::move(out)), v.degree);
  };
  // independent route: the linear component of Phi under the suspension
  auto via_phi = [&Phi](const Element& v) { return suspend(Phi.components[0]({desuspend(v)})); };

  for (int d : src.carrier.degrees) {
    for (int s = 0; s < samples; ++s) {
      Element v = sample_nonzero(src.carrier, rng, d);
      Element lv = ladder(v);
      ++res.checks_run;
      if (!element_equal(lv, via_phi(v)))
        record_failure(&res, tgt.carrier, "ladder = Phi_1", 1, {v}, lv, via_phi(v));
      // chain property with the fiber unaries on both sides
      Element lhs = ladder(src.brackets[0]({v}));
      Element rhs = tgt.brackets[0]({lv});
      ++res.checks_run;
      if (!element_equal(lhs, rhs))
        record_failure(&res, tgt.carrier, "chain property", 1, {v}, lhs, rhs);
    }
  }
  return res;
}

CheckResult gauge_morphism_check(int n, int r, const PolyForm& sigma, Rng& rng, int samples) {
  CheckResult res;
  res.name = "gauge identity e^iota * L = iota_infty (r=" + std::to_string(r) + ")";
  if (!is_closed(sigma)) throw InvalidInput("gauge_morphism_check: sigma not closed");
  const int K = r + 2;
  Dgla xham = make_hamiltonian_fields(n, sigma);
  Dgla g = twist(make_small_g(n, r), smallg_form_element(sigma, r));
  const std::string dom = xham.carrier.tag;
  const std::string cod = g.carrier.tag;

  MultiMap Lmap = MultiMap::make_skew(1, 0, dom, cod, [n](const std::vector<Element>& v) -> Element {
    if (v[0].is_zero()) return zero_element();
    return Element(Value(sg_lie(std::get<PolyVectorField>(v[0].value))), 0);
  });
  MultiMap imap = MultiMap::make_skew(1, -1, dom, cod, [n](const std::vector<Element>& v) -> Element {
    if (v[0].is_zero()) return zero_element();
    return Element(Value(sg_iota(std::get<PolyVectorField>(v[0].value))), 0);
  });
  CeRef ceL = make_ce({Lmap});
  CeRef ceI = make_ce({imap});

  LInftyMorphism ii = iota_infty(n, r, sigma, K + 1);
  // compose iota_infty with the inclusion of the truncated de Rham complex
  auto included = [&](int k) {
    MultiMap comp = ii.components[static_cast<std::size_t>(k - 1)];
    return MultiMap::make_skew(k, 1 - k, dom, cod, [comp, n](const std::vector<Element>& v) -> Element {
      Element w = comp(v);
      if (w.is_zero()) return zero_element();
      return Element(Value(sg_form(std::get<PolyForm>(w.value))), 0);
    });
  };

  CeRef series = ce_gauge_action(xham, g, ceI, ceL, K);

  auto tuples = [&](int k) {
    std::vector<std::vector<Element>> out;
    for (int s = 0; s < samples; ++s) out.push_back(sample_tuple(xham.carrier, rng, k));
    return out;
  };

  for (int k = 1; k <= K; ++k) {
    MultiMap lhs = ce_component(series, k, dom, cod);
    MultiMap rhs = included(k);
    for (const auto& args : tuples(k)) {
      Element a = lhs(args);
      Element b = rhs(args);
      ++res.checks_run;
      if (!g.carrier.equal(a, b))
        record_failure(&res, g.carrier, "series component = multicontraction", k, args, a, b);
    }
  }

  // structural sub-identities from the proof
  {
    CeRef br = ce_bracket(xham, g, ceI, ceL);
    MultiMap lhs = ce_component(br, 2, dom, cod);
    for (const auto& args : tuples(2)) {
      Element a = lhs(args);
      const auto& X = std::get<PolyVectorField>(args[0].value);
      const auto& Y = std::get<PolyVectorField>(args[1].value);
      Element b = element_scale(Rational(2), Element(Value(sg_iota(vf_bracket(X, Y))), -1));
      ++res.checks_run;
      if (!g.carrier.equal(a, b))
        record_failure(&res, g.carrier, "[iota, L] = 2 iota o bracket", 2, args, a, b);
    }
    // bracket of two contraction-slot elements vanishes
    for (const auto& args : tuples(2)) {
      Element a = g.bracket({imap({args[0]}), imap({args[1]})});
      ++res.checks_run;
      if (!g.carrier.is_zero(a))
        record_failure(&res, g.carrier, "iota-iota bracket vanishes", 2, args, a, zero_element());
    }
  }
  for (int k = 1; k < K; ++k) {
    CeRef ik = make_ce({included(k)});
    CeRef br = ce_bracket(xham, g, ceI, ik);
    MultiMap lhs = ce_component(br, k + 1, dom, cod);
    MultiMap rhs = mm_scale(Rational(k + 1), included(k + 1));
    for (const auto& args : tuples(k + 1)) {
      Element a = lhs(args);
      Element b = rhs(args);
      ++res.checks_run;
      if (!g.carrier.equal(a, b))
        record_failure(&res, g.carrier, "[iota, (iota_infty)_k] = (k+1)(iota_infty)_{k+1}", k + 1,
                       args, a, b);
    }
  }
  return res;
}

Comomentum abelian_translation_comomentum(int n, int r, const PolyForm& sigma) {
  if (n < r + 1) throw InvalidInput("comomentum example needs n >= r+1");
  std::vector<PolyVectorField> rho = {PolyVectorField::basis(n, 0), PolyVectorField::basis(n, n - 1)};
  for (const auto& X : rho)
    if (!lie_derivative(X, sigma).is_zero())
      throw InvalidInput("comomentum example: generator is not Hamiltonian for sigma");
  if (r == 1) {
    PolyForm obstruction = contract(rho[0], contract(rho[1], sigma));
    if (!obstruction.is_zero())
      throw InvalidInput("comomentum example at r=1 needs iota_X iota_Y sigma = 0 (take n >= 3)");
  }
  Comomentum data;
  // abelian: all structure constants vanish
  std::vector<std::vector<std::vector<Rational>>> constants(
      2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
  data.lie = make_lie_algebra("K=R^2", constants);
  data.rho = rho;
  const std::string dom = data.lie.carrier.tag;
  for (int k = 1; k <= r; ++k) {
    auto eval = [rho, sigma, k, n](const std::vector<Element>& v) -> Element {
      PolyForm w = sigma;
      for (int i = k - 1; i >= 0; --i) {
        if (v[static_cast<std::size_t>(i)].is_zero()) return zero_element();
        const auto& xi = std::get<LieCoords>(v[static_cast<std::size_t>(i)].value);
        PolyVectorField X(n);
        for (std::size_t j = 0; j < xi.c.size(); ++j) X = X + xi.c[j] * rho[j];
        w = contract(X, w);
        if (w.is_zero()) return zero_element();
      }
      PolyForm h = primitive(-w);
      if (h.is_zero()) return zero_element();
      return Element(Value(std::move(h)), 0);
    };
    data.h.push_back(MultiMap::make(k, -k, dom, "omega:" + std::to_string(n), eval));
  }
  return data;
}

CheckResult comomentum_check(int n, int r, const PolyForm& sigma, const Comomentum& data,
                             const std::optional<PolyForm>& beta, Rng& rng, int samples) {
  CheckResult res;
  res.name = "homotopy comomentum condition";
  if (!is_closed(sigma)) throw InvalidInput("comomentum_check: sigma not closed");
  const std::size_t dim = data.rho.size();

  // rho must be a Lie algebra morphism into the sigma-Hamiltonian fields
  for (const auto& X : data.rho)
    if (!lie_derivative(X, sigma).is_zero())
      throw InvalidInput("comomentum_check: rho is not valued in Hamiltonian fields");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      LieCoords ei, ej;
      ei.c.assign(dim, Rational(0));
      ej.c.assign(dim, Rational(0));
      ei.c[i] = Rational(1);
      ej.c[j] = Rational(1);
      Element bij = data.lie.bracket({Element(Value(ei), 0), Element(Value(ej), 0)});
      PolyVectorField want(n);
      if (!bij.is_zero()) {
        const auto& cs = std::get<LieCoords>(bij.value);
        for (std::size_t k = 0; k < dim; ++k) want = want + cs.c[k] * data.rho[k];
      }
      if (!(vf_bracket(data.rho[i], data.rho[j]) == want))
        throw InvalidInput("comomentum_check: rho is not a Lie algebra morphism");
    }

  LInftyMorphism ii = iota_infty(n, r, sigma, r + 1);
  const std::string dom = data.lie.carrier.tag;

  auto lie_sample = [&](Rng& rg) {
    LieCoords v;
    v.c.assign(dim, Rational(0));
    for (auto& q : v.c) q = rg.next_coeff();
    return Element(Value(std::move(v)), 0);
  };

  for (int k = 1; k <= r + 1; ++k) {
    // LHS: (iota_infty sigma o rho)_k
    auto rho = data.rho;
    auto iik = ii.components[static_cast<std::size_t>(k - 1)];
    MultiMap lhs = MultiMap::make_skew(
        k, 1 - k, dom, iik.codomain(), [rho, iik, n, k](const std::vector<Element>& v) -> Element {
          std::vector<Element> fields;
          for (const auto& e : v) {
            if (e.is_zero()) return zero_element();
            const auto& xi = std::get<LieCoords>(e.value);
            PolyVectorField X(n);
            for (std::size_t j = 0; j < xi.c.size(); ++j) X = X + xi.c[j] * rho[j];
            fields.push_back(Element(Value(std::move(X)), 0));
          }
          return iik(fields);
        });
    // RHS: d o h_k + h_{k-1} |> [.,.]_K
    std::vector<MultiMap> rhs_terms;
    if (k <= static_cast<int>(data.h.size())) {
      MultiMap hk = data.h[static_cast<std::size_t>(k - 1)];
      rhs_terms.push_back(MultiMap::make_skew(k, 1 - k, dom, hk.codomain(),
                                              [hk](const std::vector<Element>& v) -> Element {
                                                Element w = hk(v);
                                                if (w.is_zero()) return zero_element();
                                                return Element(Value(de_rham(std::get<PolyForm>(w.value))), 0);
                                              }));
    }
    if (k >= 2 && k - 1 <= static_cast<int>(data.h.size()))
      rhs_terms.push_back(nr_product(data.h[static_cast<std::size_t>(k - 2)], data.lie.bracket));

    // basis tuples plus random coordinate tuples
    std::vector<std::vector<Element>> tuples;
    if (k <= static_cast<int>(dim)) {
      std::vector<Element> basis;
      for (std::size_t i = 0; i < dim; ++i) {
        LieCoords e;
        e.c.assign(dim, Rational(0));
        e.c[i] = Rational(1);
        basis.push_back(Element(Value(std::move(e)), 0));
      }
      std::vector<Element> t(basis.begin(), basis.begin() + k);
      tuples.push_back(std::move(t));
    }
    for (int s = 0; s < samples; ++s) {
      std::vector<Element> t;
      for (int i = 0; i < k; ++i) t.push_back(lie_sample(rng));
      tuples.push_back(std::move(t));
    }
    for (const auto& args : tuples) {
      Element L = lhs(args);
      Element R = zero_element();
      for (const auto& t : rhs_terms) R = element_add(R, t(args));
      ++res.checks_run;
      if (!element_equal(L, R)) {
        Failure f;
        f.check = "comomentum condition";
        f.arity = k;
        for (const auto& e : args) f.inputs.push_back(element_render(e));
        f.lhs = element_render(L);
        f.rhs = element_render(R);
        res.failures.push_back(std::move(f));
      }
    }
  }

  if (beta) {
    PolyForm sigma2 = sigma + de_rham(*beta);
    DglaMorphism chi = chi_beta(n, r, *beta, sigma);
    for (const auto& X : data.rho) {
      ++res.checks_run;
      if (!lie_derivative(X, sigma2).is_zero()) {
        Failure f;
        f.check = "prism: rho Hamiltonian for sigma + d beta";
        f.arity = 1;
        f.inputs.push_back(render(X));
        res.failures.push_back(std::move(f));
        continue;
      }
      Element img = chi.map(Element(Value(sg_lie(X)), 0));
      const auto& sg = std::get<SmallGElement>(img.value);
      ++res.checks_run;
      if (!(sg.lie == X) || !sg.iota.is_zero() || !(sg.form == lie_derivative(X, *beta))) {
        Failure f;
        f.check = "prism top face: chi(L rho) = rho + Lie_rho beta";
        f.arity = 1;
        f.inputs.push_back(render(X));
        f.lhs = element_render(img);
        res.failures.push_back(std::move(f));
      }
    }
  }
  return res;
}

}  // namespace koszul
